#pragma once

#include "spherecalc/blowup.hpp"
#include "spherecalc/embedded.hpp"
#include "spherecalc/immersed.hpp"
#include "spherecalc/lens.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "sphere-calculus/1";

enum class Format { text, json, latex, dot, ascii };

// Throws std::invalid_argument on an unknown name.
Format parse_format(const std::string& name);
std::string format_name(Format f);

Json to_json(const Rational& r);
Json to_json(const PolyX& p);
Json to_json(const SeriesT& s);
Json to_json(const AlphaPoly& a);
Rational rational_from_json(const Json& j);
PolyX polyx_from_json(const Json& j);
SeriesT series_from_json(const Json& j);
AlphaPoly alphapoly_from_json(const Json& j);

Json embedded_json(const EmbeddedRelation& rel);
EmbeddedRelation embedded_from_json(const Json& j);
Json immersed_json(const NormalForm& nf, int order);
NormalForm immersed_from_json(const Json& j);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

std::string latex_polyx(const PolyX& p);

// Named series: B, S, Delta, Q, q, Qprime.
const SeriesT& named_series(const BlowupFunctions& bf, const std::string& name);

std::string emit_series(const std::string& name, const SeriesT& s, Format f);
std::string emit_embedded(const EmbeddedRelation& rel, Format f);
std::string emit_immersed(const NormalForm& nf, int order, Format f);
std::string emit_finite_type(int p, int a, int r, int order, Format f);
std::string emit_character_variety(int p, int parity, const std::vector<FlatClass>& chi, Format f);
std::string emit_poset(const PosetJ& j, Format f);

// The cosh side statement, e.g. "D_w((x²−4)·cosh(tα)) = 0" for an empty sum.
std::string cosh_statement(const NormalForm& nf);

}  // namespace sc
