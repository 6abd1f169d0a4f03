#pragma once

// JSON exchange formats.
//
//   matrix:      {"dim": n, "entries": [[[re, im], ...], ...]}   (row-major)
//   generators:  {"rep": tag, "kind": kind, "members": [matrix, ...]}
//   coeffs:      {"source_kind": ..., "values": [[[[re,im] x4] x3] x4]}  ordered (mu, i, nu)
//   report:      {"identity", "label", "max_residual", "tolerance", "passed", "witness", "note"}
//   structure:   {"n", "count", "f": [[[..]]], "d": [[[..]]], "delta_coeff", residuals}
//   obstruction: {"n", "max_abs_d", "argmax": [a,b,c], "delta_coeff", "obstructed", "statement"}

#include "json.hpp"
#include "lieforge/algebra_check.hpp"
#include "lieforge/rep_transfer.hpp"
#include "lieforge/sun_explorer.hpp"

namespace lieforge {

using json = nlohmann::json;

json to_json(const CMatrix& m);
/// Throws ParseError on malformed input (missing keys, ragged rows,
/// non-finite values).
CMatrix matrix_from_json(const json& j);

json to_json(const GeneratorSet& s);
GeneratorSet generator_set_from_json(const json& j);

json to_json(const CoeffTensor& t);
json to_json(const CheckReport& r);
CheckReport report_from_json(const json& j);
json to_json(const StructureTensors& st);
json to_json(const ObstructionReport& r);

}  // namespace lieforge
