#ifndef CROSSLAB_JSON_IO_HPP
#define CROSSLAB_JSON_IO_HPP

#include "crosslab/drawing.hpp"
#include "crosslab/shelling.hpp"

#include <string>

namespace crosslab {

// ---------------------------------------------------------------------------
// Canonical JSON text: object keys sorted, two-space indentation, one
// trailing newline, rationals as reduced "p/q" strings with positive
// denominator.  Because every emitter canonicalizes, parsing a document
// and serializing it again reproduces the bytes exactly.
// ---------------------------------------------------------------------------

std::string drawing_to_json(const Drawing& d);

// Parses and structurally validates a drawing document: required keys
// only, ids unique, edges distinct with both endpoints present, "n"
// consistent with the vertex list, layout payload (if any) well formed.
// Geometric goodness stays with validate_good_drawing.  Malformed JSON or
// any schema violation raises std::invalid_argument.
Drawing drawing_from_json(const std::string& text);

// File wrappers; unreadable/unwritable paths raise std::runtime_error.
Drawing load_drawing(const std::string& path);
void save_drawing(const std::string& path, const Drawing& d);

// {"S":[...], "witness":{"x":"p/q","y":"p/q"} | null, "pairs":[{"i","j",
// "vi_on_boundary","vj_on_boundary"}...], "valid":bool}; a null witness
// is the unbounded face.
std::string certificate_to_json(const ShellingCertificate& c);

// Pipeline verdict with the certificate kind, counts, floor, and the
// cumulative bound table evaluated at the witness face.
std::string pipeline_to_json(const PipelineVerdict& v);

} // namespace crosslab

#endif
