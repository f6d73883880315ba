#pragma once

#include <string>

#include "cubiclat/certificate.hpp"
#include "cubiclat/short_vectors.hpp"

namespace cubiclat {

// Certificate JSON, schema_version "1". All integers are serialized as
// decimal strings; basis vectors as arrays of {"name", "coeff"} pairs using
// the ambient column names. Serialization is canonical: a given Certificate
// always produces the same bytes.
std::string certificate_to_json_text(const Certificate& cert);

// Throws SchemaError on malformed input.
Certificate certificate_from_json_text(const std::string& text);

// Parse-then-verify convenience for files.
VerifyResult verify_json_text(const std::string& text);

std::string predicate_report_to_json_text(const PredicateReport& report);

// {"rank": r, "gram": [[decimal strings]]}; numbers accepted for
// convenience. Throws SchemaError.
IntMatrix gram_from_json_text(const std::string& text);

std::string short_vector_list_to_json_text(const ShortVectorList& list,
                                           const std::string& lattice_label);

}  // namespace cubiclat
