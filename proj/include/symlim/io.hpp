#pragma once

// JSON and CSV forms of the library's value types. Exact values are written
// as "p/q" strings, floating-point values with 12 significant digits.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "symlim/characters.hpp"
#include "symlim/classify.hpp"
#include "symlim/embedding.hpp"
#include "symlim/errors.hpp"
#include "symlim/odometer.hpp"
#include "symlim/partitions.hpp"
#include "symlim/permgroup.hpp"

namespace symlim {

using Json = nlohmann::ordered_json;

// --- writers --------------------------------------------------------------

inline Json to_json(const Permutation& p) { return Json(p.images()); }
inline Json to_json(const CycleType& ct) { return Json(ct.counts()); }
inline Json to_json(const Partition& lambda) { return Json(lambda.parts()); }
inline Json to_json(const Tableau& t) { return Json(t.rows()); }

inline Json to_json(const BaseSequence& seq) {
  return Json{{"prefix", seq.prefix()}, {"tail", seq.tail()}};
}

inline Json to_json(const GroupElement& g) {
  return Json{{"level", g.level()}, {"images", g.permutation().images()}};
}

inline Json to_json(const CharacterSpec& spec) {
  Json j{{"kind", spec.name()}};
  if (spec.kind != CharacterSpec::Kind::Delta) j["p"] = spec.p;
  return j;
}

inline Json to_json(const SupernaturalNumber& s) {
  Json j = Json::object();
  for (const auto& [p, e] : s.exponents) j[std::to_string(p)] = e.str();
  return j;
}

inline Json to_json(const LevelAutomorphism& a) {
  return Json{{"level", a.level()}, {"points", a.points()}, {"images", a.action().images()}};
}

// --- readers --------------------------------------------------------------

namespace detail {

template <class T>
std::vector<T> uint_array(const Json& j, const std::string& what) {
  require(j.is_array(), what + " must be an array");
  std::vector<T> out;
  for (const auto& v : j) {
    require(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0),
            what + " entries must be non-negative integers");
    out.push_back(v.get<T>());
  }
  return out;
}

}  // namespace detail

inline Permutation permutation_from_json(const Json& j) {
  return Permutation(detail::uint_array<Point>(j, "permutation"));
}

inline CycleType cycle_type_from_json(const Json& j) {
  return CycleType::from_counts(detail::uint_array<std::uint64_t>(j, "cycle type"));
}

inline Partition partition_from_json(const Json& j) {
  return Partition(detail::uint_array<std::uint32_t>(j, "partition"));
}

inline BaseSequence base_sequence_from_json(const Json& j) {
  if (j.is_array()) return BaseSequence::periodic(detail::uint_array<std::uint64_t>(j, "tail"));
  detail::require(j.is_object() && j.contains("tail"), "base sequence needs a tail");
  std::vector<std::uint64_t> prefix;
  if (j.contains("prefix")) prefix = detail::uint_array<std::uint64_t>(j.at("prefix"), "prefix");
  return BaseSequence(std::move(prefix), detail::uint_array<std::uint64_t>(j.at("tail"), "tail"));
}

inline GroupElement group_element_from_json(const BaseSequence& seq, const Json& j) {
  detail::require(j.is_object() && j.contains("level") && j.contains("images"),
                  "group element needs level and images");
  return make_element(seq, j.at("level").get<std::size_t>(), permutation_from_json(j.at("images")));
}

inline CharacterSpec character_spec_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("kind"), "character spec needs a kind");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "delta") return CharacterSpec::delta();
  const auto p = j.value("p", 0u);
  if (kind == "nat_power") return CharacterSpec::nat_power(p);
  if (kind == "sgn_nat_power") return CharacterSpec::sgn_nat_power(p);
  throw InvalidArgument("unknown character kind: " + kind);
}

/// "2,3" is the periodic sequence (2,3,2,3,...); "12|5" has prefix (12)
/// and tail (5); "|2" is the same as "2".
inline BaseSequence parse_base_sequence(const std::string& text) {
  auto numbers = [](const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      try {
        std::size_t used = 0;
        const auto v = std::stoull(item, &used);
        detail::require(used == item.size(), "bad number in base sequence: " + item);
        out.push_back(v);
      } catch (const std::logic_error&) {
        throw InvalidArgument("bad number in base sequence: " + item);
      }
    }
    return out;
  };
  const auto bar = text.find('|');
  if (bar == std::string::npos) return BaseSequence::periodic(numbers(text));
  return BaseSequence(numbers(text.substr(0, bar)), numbers(text.substr(bar + 1)));
}

// --- CSV ------------------------------------------------------------------

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << '\n';
}

/// "(3,1)"; "()" for the empty partition.
inline std::string partition_string(const Partition& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.length(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
  return s + ")";
}

/// Cycle lengths in weakly decreasing order, fixed points included: "(2,1,1)".
inline std::string cycle_type_string(const CycleType& ct) {
  const auto lengths = ct.lengths();
  std::string s = "(";
  for (std::size_t i = 0; i < lengths.size(); ++i) s += (i ? "," : "") + std::to_string(lengths[i]);
  return s + ")";
}

}  // namespace symlim
