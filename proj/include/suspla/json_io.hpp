#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "suspla/bialgebra.hpp"
#include "suspla/enveloping.hpp"
#include "suspla/milnor_moore.hpp"

namespace suspla {

using Json = nlohmann::json;

/* Canonical text form shared by every emitter: two-space indent, keys in
 * sorted order (the underlying object map is ordered), trailing newline.
 * Reruns on identical inputs produce identical bytes. */
std::string dump_json(const Json& j);

/* Parse helpers that convert syntax errors into SchemaError. */
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

/* Fields: {"kind":"Q"} or {"kind":"Fp","p":3}. */
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/* Monoids: {"kind":"finite_table","elements":[...],"identity":i,"table":[[...]]}
 * or {"kind":"free_rank1","generator":"Q"}. */
Json monoid_to_json(const Monoid& m);
Monoid monoid_from_json(const Json& j);

/* Lie documents: {"monoid":..., "basis":[{"name":...,"degree":...}],
 * "action":{g:{x:[[name,scalar]...]}}, "bracket":{"x|y":[[name,scalar]...]}}.
 * Degrees are monoid element names; scalars are canonical strings.  An
 * optional "field" key selects the ground field, defaulting to the
 * rationals; the writer always emits it so round trips are lossless. */
Json lie_to_json(const SuspensiveLie& L);
SuspensiveLie lie_from_json(const Json& j);

/* Bialgebra documents: field, basis, unit, counit, mult (with "overflow"
 * markers), comult, and an optional rigid block {"monoid":...,
 * "eta":{g:basisname}}.  Graded documents carry the grading monoid at top
 * level (the writer emits it; the reader also accepts taking it from the
 * rigid block); ungraded documents omit degrees entirely. */
Json bialgebra_to_json(const PresentedBialgebra& A, const RigidStructure* rigid = nullptr);
PresentedBialgebra bialgebra_from_json(const Json& j);

/* Reads the "rigid" block of a bialgebra document against an already parsed
 * algebra; empty when the document has none.  Eta values are basis names. */
std::optional<RigidStructure> rigid_from_json(const Json& j, const PresentedBialgebra& A);

/* Envelope output: the bialgebra document of env.algebra together with its
 * rigid block, a "filtration" map from basis name to Lie level, and the
 * truncation data ("window" as element names, "lie_cap"). */
Json envelope_to_json(const TruncatedEnvelope& env);

/* Equivalence-report output: {"verdict", "per_degree_dims", "witnesses",
 * "window", "seed"}, with degrees keyed by monoid element name. */
Json mm_report_to_json(const MMReport& r, const DegreeWindow& window, std::uint64_t seed);

}  // namespace suspla
