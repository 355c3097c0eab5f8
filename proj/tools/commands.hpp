#pragma once

// Command implementations shared by the CLI and the acceptance runner. Each
// command returns a JSON document and an exit code; text output is rendered
// from the JSON.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilden/hilden.hpp"

namespace hilden::cli {

using nlohmann::json;

inline constexpr int exit_ok       = 0;
inline constexpr int exit_failures = 1;
inline constexpr int exit_usage    = 2;
inline constexpr int exit_capacity = 3;

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Result {
  json doc;
  int  exit_code = exit_ok;
};

inline json envelope(std::string const& command, json params) {
  return {{"schema", 1}, {"command", command}, {"params", std::move(params)}, {"rows", json::array()}};
}

// "3", "1..10", "1,2,5" or a mix ("1..3,6").
inline std::vector<std::size_t> parse_range(std::string const& text) {
  std::vector<std::size_t> out;
  std::stringstream        ss(text);
  std::string              part;
  auto                     num = [&](std::string const& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw usage_error("bad range '" + text + "'");
    return static_cast<std::size_t>(std::stoul(s));
  };
  while (std::getline(ss, part, ',')) {
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(part));
      continue;
    }
    auto lo = num(part.substr(0, dots)), hi = num(part.substr(dots + 2));
    if (lo > hi) throw usage_error("empty range '" + part + "'");
    for (auto x = lo; x <= hi; ++x) out.push_back(x);
  }
  if (out.empty()) throw usage_error("empty range");
  return out;
}

inline std::vector<std::string> const& verify_groups() {
  static std::vector<std::string> const g{"lh", "ph", "ph1", "prop-lh", "intermediate-lh",
                                          "sh", "vw", "lemmas"};
  return g;
}

inline void check_group(std::string const& group, std::vector<std::string> const& allowed) {
  if (std::find(allowed.begin(), allowed.end(), group) == allowed.end()) {
    throw usage_error("unknown group '" + group + "'");
  }
}

inline void check_n(std::size_t n) {
  if (n < 1) throw usage_error("--n must be >= 1");
}

inline void check_k(std::string const& group, std::size_t k) {
  if (group == "sh" && k < 3) throw usage_error("--k must be >= 3 for sh");
}

////////////////////////////////////////////////////////////////////////////
// verify
////////////////////////////////////////////////////////////////////////////

inline constexpr std::size_t max_lemma_n = 3;

inline Result cmd_verify(std::string const& group, std::size_t n, std::size_t k,
                         VerifyOptions const& opt) {
  check_group(group, verify_groups());
  check_n(n);
  check_k(group, k);
  if (group == "lemmas" && n > max_lemma_n) {
    Result r{envelope("verify", {{"group", group}, {"n", n}}), exit_capacity};
    r.doc["error"] = "lemma identities are instantiated for n <= " + std::to_string(max_lemma_n);
    return r;
  }
  auto rep = verify_group(group, n, group == "sh" ? k : 0, opt);
  auto j   = to_json(rep);
  Result r{envelope("verify", {{"group", group},
                               {"n", n},
                               {"k", group == "sh" ? json(k) : json(nullptr)},
                               {"jobs", opt.jobs},
                               {"budget", opt.budget}}),
           rep.all_closed() ? exit_ok : exit_failures};
  r.doc["rows"]    = j["rows"];
  r.doc["checks"]  = j["checks"];
  r.doc["summary"] = j["summary"];
  return r;
}

////////////////////////////////////////////////////////////////////////////
// h1
////////////////////////////////////////////////////////////////////////////

// Expected H_1 from the closed forms; none when there is no prediction.
inline std::optional<AbelianInvariants> expected_h1(std::string const& group, std::size_t n,
                                                    std::size_t k) {
  AbelianInvariants a;
  if (group == "lh" || group == "prop-lh" || group == "intermediate-lh") {
    a.free_rank = 1;
    a.torsion   = {2, 2};
  } else if (group == "sh") {
    a.free_rank = 1;
    a.torsion   = {2, 2};
    if (n % 2 == 1 && k % 2 == 0) a.torsion.push_back(2);
  } else if (group == "vw") {
    a.torsion = {2, 2};
  } else {
    return std::nullopt;
  }
  return a;
}

inline json invariants_json(AbelianInvariants const& a) {
  json t = json::array();
  for (auto const& d : a.torsion) t.push_back(d.convert_to<long long>());
  return {{"free_rank", a.free_rank}, {"torsion", t}};
}

inline Result cmd_h1(std::string const& group, std::vector<std::size_t> const& ns,
                     std::vector<std::size_t> const& ks) {
  static std::vector<std::string> const allowed{"lh", "ph", "ph1", "prop-lh", "intermediate-lh",
                                                "sh", "vw"};
  check_group(group, allowed);
  for (auto n : ns) check_n(n);
  if (group == "sh") {
    if (ks.empty()) throw usage_error("--k is required for sh");
    for (auto k : ks) check_k(group, k);
  }
  std::vector<std::size_t> kk = group == "sh" ? ks : std::vector<std::size_t>{0};
  Result r{envelope("h1", {{"group", group}, {"n", ns}, {"k", group == "sh" ? json(ks) : json(nullptr)}})};
  std::size_t mismatches = 0;
  for (auto n : ns)
    for (auto k : kk) {
      auto pres = build_presentation(group, n, k);
      json row{{"n", n}, {"k", k ? json(k) : json(nullptr)}};
      AbelianInvariants got;
      if (group == "lh" || group == "sh") {
        auto rep = h1_generators_report(pres);
        got      = rep.invariants;
        json classes;
        for (auto const& c : rep.classes) {
          classes[c.name] = c.order ? json(c.order->str()) : json("inf");
        }
        row["classes"] = classes;
        row["named_classes_split"] = rep.splits;
      } else {
        got = h1_of_presentation(pres);
      }
      row["h1"] = to_string(got);
      auto inv  = invariants_json(got);
      row["free_rank"] = inv["free_rank"];
      row["torsion"]   = inv["torsion"];
      auto exp         = expected_h1(group, n, k);
      row["expected"]  = exp ? json(to_string(*exp)) : json(nullptr);
      bool match       = !exp || *exp == got;
      if (row.contains("named_classes_split") && !row["named_classes_split"].get<bool>()) {
        match = false;
      }
      row["match"] = match;
      mismatches += !match;
      r.doc["rows"].push_back(row);
    }
  r.doc["summary"] = {{"rows", r.doc["rows"].size()}, {"mismatches", mismatches}};
  r.exit_code      = mismatches ? exit_failures : exit_ok;
  return r;
}

////////////////////////////////////////////////////////////////////////////
// braid
////////////////////////////////////////////////////////////////////////////

inline std::vector<std::string> read_word_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read '" + path + "'");
  std::vector<std::string> out;
  std::string              line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

inline BraidParseContext braid_context(std::size_t strands, std::size_t n) {
  BraidParseContext ctx{strands, n};
  if (ctx.strands == 0 && n > 0) ctx.strands = 2 * n + 2;
  if (ctx.strands < 2) throw usage_error("give --strands or --n");
  return ctx;
}

inline BraidWord parse_or_throw(std::string const& text, BraidParseContext const& ctx) {
  try {
    return parse_braid(text, ctx);
  } catch (parse_error const& e) {
    throw usage_error("cannot parse \"" + text + "\": " + e.what() + " (position " +
                      std::to_string(e.position()) + ")");
  }
}

inline Result cmd_braid_eq(std::string const& a, std::string const& b, BraidParseContext const& ctx,
                           bool mcg, std::size_t budget) {
  auto x = parse_or_throw(a, ctx), y = parse_or_throw(b, ctx);
  Result r{envelope("braid eq", {{"strands", ctx.strands}, {"n", ctx.n}, {"mcg", mcg}})};
  bool   beq = braids_equal(x, y);
  json   row{{"lhs", a}, {"rhs", b}, {"braid_equal", beq}};
  std::string level = beq ? "braid" : "none";
  if (mcg) {
    try {
      bool meq          = beq || mcg_equal(x, y, budget);
      row["mcg_equal"]  = meq;
      if (!beq && meq) level = "sphere_mcg";
    } catch (std::exception const& e) {
      row["mcg_equal"] = nullptr;
      row["note"]      = e.what();
      level            = "UNRESOLVED";
    }
  }
  row["closes_at"] = level;
  r.doc["rows"].push_back(row);
  return r;
}

inline Result cmd_braid_nf(std::string const& a, BraidParseContext const& ctx) {
  auto   x  = parse_or_throw(a, ctx);
  auto   nf = normal_form(x);
  Result r{envelope("braid nf", {{"strands", ctx.strands}, {"n", ctx.n}})};
  json   factors = json::array();
  for (auto const& f : nf.factors) factors.push_back(to_cycle_string(f));
  r.doc["rows"].push_back({{"word", a},
                           {"delta_power", nf.delta_power},
                           {"factor_count", nf.factors.size()},
                           {"factors", factors}});
  return r;
}

////////////////////////////////////////////////////////////////////////////
// subgroups, liftable, export
////////////////////////////////////////////////////////////////////////////

inline Result cmd_subgroups(std::size_t n, bool dump) {
  check_n(n);
  Result r{envelope("subgroups", {{"n", n}, {"m", 2 * n + 2}})};
  try {
    for (auto label : {SubgroupLabel::W, SubgroupLabel::V, SubgroupLabel::VW, SubgroupLabel::Soe,
                       SubgroupLabel::SoxSe}) {
      auto t = enumerate_subgroup(label, n);
      json row{{"label", to_string(label)}, {"order", t.elements.size()}};
      if (dump) {
        json el = json::array();
        for (auto const& p : t.elements) el.push_back(to_cycle_string(p));
        row["elements"] = el;
      }
      r.doc["rows"].push_back(row);
    }
  } catch (capacity_error const& e) {
    r.doc["error"] = e.what();
    r.exit_code    = exit_capacity;
  }
  return r;
}

inline Result cmd_liftable(std::string const& word, std::size_t n) {
  check_n(n);
  auto ctx = braid_context(0, n);
  auto b   = parse_or_throw(word, ctx);
  auto p   = psi_of_braid_word(b.word, ctx.strands);
  Result r{envelope("liftable", {{"n", n}})};
  r.doc["rows"].push_back({{"word", word},
                           {"psi", to_cycle_string(p)},
                           {"liftable", is_liftable(p)},
                           {"parity", is_parity_preserving(p)  ? "preserving"
                                      : is_parity_reversing(p) ? "reversing"
                                                               : "neither"}});
  return r;
}

inline Result cmd_export(std::string const& group, std::size_t n, std::size_t k) {
  check_group(group, verify_groups());
  check_n(n);
  check_k(group, k);
  auto   pres = group == "lemmas" ? lemma_identities(n) : build_presentation(group, n, k);
  Result r{envelope("export", {{"group", group}, {"n", n}})};
  r.doc["presentation"] = to_json(pres);
  r.doc.erase("rows");
  return r;
}

////////////////////////////////////////////////////////////////////////////
// Text rendering
////////////////////////////////////////////////////////////////////////////

inline std::string cell(json const& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

inline std::string render_text(json const& doc) {
  std::ostringstream out;
  out << doc.value("command", "?");
  for (auto const& [key, v] : doc["params"].items()) out << "  " << key << "=" << cell(v);
  out << "\n";
  if (doc.contains("error")) out << "error: " << cell(doc["error"]) << "\n";
  if (doc.contains("presentation")) out << doc["presentation"].dump(2) << "\n";
  if (doc.contains("rows") && !doc["rows"].empty()) {
    static std::vector<std::string> const leading{"n",   "k",   "label", "id",        "tag",
                                                  "word", "lhs", "rhs",   "closes_at", "status",
                                                  "h1",  "expected", "match"};
    std::vector<std::string> cols;
    for (auto const& c : leading)
      if (std::any_of(doc["rows"].begin(), doc["rows"].end(),
                      [&](json const& row) { return row.contains(c); }))
        cols.push_back(c);
    for (auto const& row : doc["rows"])
      for (auto const& [key, v] : row.items())
        if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    std::vector<std::vector<std::string>> table{cols};
    for (auto const& row : doc["rows"]) {
      std::vector<std::string> line;
      for (auto const& c : cols) line.push_back(row.contains(c) ? cell(row[c]) : "");
      table.push_back(line);
    }
    std::vector<std::size_t> width(cols.size(), 0);
    for (auto const& line : table)
      for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    for (auto const& line : table) {
      std::string s;
      for (std::size_t i = 0; i < line.size(); ++i) {
        s += line[i];
        if (i + 1 < line.size()) s += std::string(width[i] - line[i].size() + 2, ' ');
      }
      out << s << "\n";
    }
  }
  if (doc.contains("checks"))
    for (auto const& c : doc["checks"])
      out << "check " << cell(c["name"]) << ": expected " << cell(c["expected"]) << ", got "
          << cell(c["actual"]) << (c["ok"].get<bool>() ? "" : "  MISMATCH") << "\n";
  if (doc.contains("summary")) {
    out << "summary:";
    for (auto const& [key, v] : doc["summary"].items()) out << " " << key << "=" << cell(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace hilden::cli
