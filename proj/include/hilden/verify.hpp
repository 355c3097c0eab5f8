#pragma once

// Pushes each relation of a presentation through a generator assignment and
// certifies it: Psi first (cheap necessary condition), then braid equality,
// then equality in Mod_{0,m}.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hilden/identities.hpp"
#include "hilden/presentation.hpp"
#include "hilden/sphere_mcg.hpp"

namespace hilden {

enum class ClosesAt { braid, sphere_mcg, permutation, failed, unresolved };

inline std::string to_string(ClosesAt c) {
  switch (c) {
    case ClosesAt::braid: return "braid";
    case ClosesAt::sphere_mcg: return "sphere_mcg";
    case ClosesAt::permutation: return "permutation";
    case ClosesAt::failed: return "FAILED";
    case ClosesAt::unresolved: return "UNRESOLVED";
  }
  return "?";
}

inline bool closed(ClosesAt c) {
  return c == ClosesAt::braid || c == ClosesAt::sphere_mcg || c == ClosesAt::permutation;
}

struct VerifyRow {
  std::string id;
  std::string tag;
  ClosesAt    closes_at = ClosesAt::unresolved;
  long long   micros    = 0;
  std::string note;  // reason for FAILED / UNRESOLVED
};

// Whole-presentation checks that are not per relator (e.g. image order).
struct VerifyCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool        ok = false;
};

struct VerificationReport {
  std::string              group;
  std::size_t              n = 0;
  std::size_t              k = 0;
  std::vector<VerifyRow>   rows;
  std::vector<VerifyCheck> checks;

  std::size_t count(ClosesAt c) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [&](auto const& r) { return r.closes_at == c; }));
  }
  bool all_closed() const {
    return std::all_of(rows.begin(), rows.end(), [](auto const& r) { return closed(r.closes_at); }) &&
           std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.ok; });
  }
};

struct VerifyOptions {
  std::size_t jobs   = 0;  // 0: hardware concurrency
  std::size_t budget = default_letter_budget;
};

namespace detail {

  template <class F>
  void parallel_for(std::size_t count, std::size_t jobs, F&& body) {
    if (jobs == 0) {
      jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = std::min(jobs, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    auto                     worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        body(i);
      }
    };
    if (jobs <= 1) {
      worker();
      return;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  inline VerifyRow check_relation(Relation const& rel, std::vector<BraidWord> const& images,
                                  std::size_t strands, std::size_t budget) {
    VerifyRow row{rel.id, rel.tag, ClosesAt::unresolved, 0, {}};
    auto      t0 = std::chrono::steady_clock::now();
    try {
      auto lhs = braid_image(rel.lhs, images, strands);
      auto rhs = braid_image(rel.rhs, images, strands);
      if (psi_of_braid_word(lhs.word, strands) != psi_of_braid_word(rhs.word, strands)) {
        row.closes_at = ClosesAt::failed;
        row.note      = "permutation images differ";
      } else if (braids_equal(lhs, rhs)) {
        row.closes_at = ClosesAt::braid;
      } else {
        bool eq       = rhs.word.empty() ? mcg_trivial(lhs, budget) : mcg_equal(lhs, rhs, budget);
        row.closes_at = eq ? ClosesAt::sphere_mcg : ClosesAt::failed;
        if (!eq) {
          row.note = "not trivial in Mod_{0," + std::to_string(strands) + "}";
        }
      }
    } catch (budget_exceeded const& e) {
      row.closes_at = ClosesAt::unresolved;
      row.note      = e.what();
    } catch (std::domain_error const& e) {
      row.closes_at = ClosesAt::unresolved;
      row.note      = e.what();
    }
    row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return row;
  }

}  // namespace detail

inline VerificationReport verify(Presentation const& pres, std::vector<BraidWord> const& images,
                                 VerifyOptions const& opt = {}) {
  if (images.size() != pres.generators().size()) {
    throw std::invalid_argument("verify: assignment is not total");
  }
  std::size_t const strands = 2 * pres.n + 2;
  VerificationReport rep{pres.name, pres.n, pres.k, {}, {}};
  rep.rows.resize(pres.relations.size());
  detail::parallel_for(pres.relations.size(), opt.jobs, [&](std::size_t i) {
    rep.rows[i] = detail::check_relation(pres.relations[i], images, strands, opt.budget);
  });
  return rep;
}

// Permutation-level verification (VW): each relator maps to the identity,
// and the images generate a group of the expected order.
inline VerificationReport verify_permutations(Presentation const& pres,
                                              std::vector<Perm> const& images,
                                              std::optional<std::size_t> expected_order) {
  std::size_t const  m = 2 * pres.n + 2;
  VerificationReport rep{pres.name, pres.n, pres.k, {}, {}};
  for (auto const& rel : pres.relations) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = perm_image(rel.relator(), images, m).is_identity();
    rep.rows.push_back({rel.id, rel.tag, ok ? ClosesAt::permutation : ClosesAt::failed,
                        std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count(),
                        ok ? "" : "permutation image is not the identity"});
  }
  if (expected_order) {
    auto got = generate_group(images, m).size();
    rep.checks.push_back({"image_order", std::to_string(*expected_order), std::to_string(got),
                          got == *expected_order});
  }
  return rep;
}

inline std::size_t factorial(std::size_t x) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= x; ++i) r *= i;
  return r;
}

// Builds `group` and verifies it against the dictionary (or Psi for vw).
inline VerificationReport verify_group(std::string const& group, std::size_t n, std::size_t k,
                                       VerifyOptions const& opt = {}) {
  if (group == "vw") {
    auto pres = build_VW(n);
    return verify_permutations(pres, vw_assignment(pres), 2 * factorial(n + 1));
  }
  Presentation pres = group == "lemmas" ? lemma_identities(n) : build_presentation(group, n, k);
  return verify(pres, dictionary_assignment(pres), opt);
}

inline VerificationReport verify_lemma_identities(std::size_t n, VerifyOptions const& opt = {}) {
  return verify_group("lemmas", n, 0, opt);
}

inline nlohmann::json to_json(VerificationReport const& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (auto const& r : rep.rows) {
    nlohmann::json j;
    j["id"]        = r.id;
    j["tag"]       = r.tag;
    j["status"]    = closed(r.closes_at) ? "closed" : to_string(r.closes_at);
    j["closes_at"] = to_string(r.closes_at);
    j["micros"]    = r.micros;
    if (!r.note.empty()) {
      j["note"] = r.note;
    }
    rows.push_back(std::move(j));
  }
  nlohmann::json checks = nlohmann::json::array();
  for (auto const& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
  }
  nlohmann::json params{{"group", rep.group}, {"n", rep.n}};
  params["k"] = rep.k ? nlohmann::json(rep.k) : nlohmann::json(nullptr);
  return {{"params", params},
          {"rows", rows},
          {"checks", checks},
          {"summary",
           {{"relators", rep.rows.size()},
            {"braid", rep.count(ClosesAt::braid)},
            {"sphere_mcg", rep.count(ClosesAt::sphere_mcg)},
            {"permutation", rep.count(ClosesAt::permutation)},
            {"failed", rep.count(ClosesAt::failed)},
            {"unresolved", rep.count(ClosesAt::unresolved)}}}};
}

}  // namespace hilden
