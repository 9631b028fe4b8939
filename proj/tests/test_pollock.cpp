#include "platonic/pollock.hpp"

#include "listed_witnesses.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <utility>

using namespace platonic;
using K = PlatonicKind;

namespace {

std::vector<Integer> term_values(const Witness& w) {
  std::vector<Integer> out;
  for (const auto& t : w.terms) out.push_back(t.value);
  return out;
}

Witness listed_witness(int target, const std::vector<int>& terms, const Pool& pool) {
  std::vector<Integer> values(terms.begin(), terms.end());
  return witness_from_values(target, values, pool);
}

}  // namespace

TEST_CASE("platonic_pool", "[pollock]") {
  const Pool ten = platonic_pool(10);
  REQUIRE(ten.size() == 5);
  CHECK(ten[0].value == 1);
  CHECK(ten[0].provenance.size() == 5);
  CHECK(ten[1].value == 4);
  CHECK(ten[1].provenance == std::vector<Provenance>{{K::Tetrahedral, 2}});
  CHECK(ten[2].value == 6);
  CHECK(ten[2].provenance == std::vector<Provenance>{{K::Octahedral, 2}});
  CHECK(ten[3].value == 8);
  CHECK(ten[4].value == 10);

  const Pool one = platonic_pool(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].provenance.size() == 5);

  const Pool twenty = platonic_pool(20);
  std::vector<Integer> values;
  for (const auto& e : twenty) values.push_back(e.value);
  CHECK(values == std::vector<Integer>{1, 4, 6, 8, 10, 12, 19, 20});
  CHECK(twenty.back().provenance ==
        std::vector<Provenance>{{K::Tetrahedral, 4}, {K::Dodecahedral, 2}});

  CHECK_THROWS_AS(platonic_pool(0), DomainError);

  for (const auto& e : platonic_pool(100'000)) {
    for (const auto& p : e.provenance) REQUIRE(platonic_value(p.kind, p.index) == e.value);
  }
}

TEST_CASE("verify_witness", "[pollock]") {
  const Pool pool = platonic_pool(200);
  CHECK(verify_witness(listed_witness(93, {85, 8}, pool)));
  CHECK_FALSE(verify_witness(listed_witness(93, {85, 9}, pool)));
  const Witness hundred = listed_witness(100, {85, 12, 1, 1, 1}, pool);
  CHECK(hundred.terms.size() == 5);
  CHECK(verify_witness(hundred));

  SECTION("forged provenance") {
    Witness w = listed_witness(93, {85, 8}, pool);
    w.terms[1].value = 9;
    w.target = 94;
    CHECK_FALSE(verify_witness(w));
  }
  SECTION("wrong sum") {
    CHECK_FALSE(verify_witness(listed_witness(94, {85, 8}, pool)));
  }
  SECTION("over budget") {
    Witness w = listed_witness(6, {1, 1, 1, 1, 1, 1}, pool);
    CHECK_FALSE(verify_witness(w));
    w.max_terms = 6;
    CHECK(verify_witness(w));
  }
  SECTION("empty") {
    CHECK_FALSE(verify_witness(Witness{0, 5, {}}));
  }
  SECTION("distinct policy rejects repeated values") {
    CHECK_FALSE(verify_witness(listed_witness(87, {85, 1, 1}, pool), TermPolicy::Distinct));
    CHECK(verify_witness(listed_witness(93, {85, 8}, pool), TermPolicy::Distinct));
  }
}

TEST_CASE("all listed decompositions of 86..119 verify", "[pollock]") {
  const Pool pool = platonic_pool(120);
  REQUIRE(listed::kDecompositions.size() == 34);
  for (const auto& [target, terms] : listed::kDecompositions) {
    INFO(target);
    REQUIRE(verify_witness(listed_witness(target, terms, pool)));
  }
}

TEST_CASE("min_term_decomposition", "[pollock]") {
  const Pool pool = platonic_pool(500);

  const auto one = min_term_decomposition(1, pool, 5);
  REQUIRE(one);
  CHECK(term_values(*one) == std::vector<Integer>{1});

  // The listed witnesses for 104 and 119 use 4 and 5 terms, but
  // 104 = 85 + 19 and 119 = 84 + 35 need only two. The largest usable term
  // is taken first.
  const auto w104 = min_term_decomposition(104, pool, 5);
  REQUIRE(w104);
  CHECK(verify_witness(*w104));
  CHECK(w104->terms.size() == 2);
  CHECK(term_values(*w104) == std::vector<Integer>{85, 19});

  const auto w119 = min_term_decomposition(119, pool, 5);
  REQUIRE(w119);
  CHECK(verify_witness(*w119));
  CHECK(w119->terms.size() == 2);
  CHECK(term_values(*w119) == std::vector<Integer>{84, 35});

  SECTION("budget too small") {
    // 2 = 1 + 1 needs two terms.
    CHECK_FALSE(min_term_decomposition(2, pool, 1));
    CHECK(min_term_decomposition(2, pool, 2));
  }
  SECTION("argument validation") {
    CHECK_THROWS_AS(min_term_decomposition(0, pool, 5), DomainError);
    CHECK_THROWS_AS(min_term_decomposition(10, pool, 0), DomainError);
    CHECK_THROWS_AS(min_term_decomposition(1'000, pool, 5, TermPolicy::Repetition, 999),
                    ResourceLimit);
  }
  SECTION("distinct policy") {
    CHECK_FALSE(min_term_decomposition(2, pool, 5, TermPolicy::Distinct));
    CHECK_FALSE(min_term_decomposition(3, pool, 5, TermPolicy::Distinct));
    const auto w = min_term_decomposition(88, pool, 5, TermPolicy::Distinct);
    REQUIRE(w);
    CHECK(verify_witness(*w, TermPolicy::Distinct));
  }
}

TEST_CASE("minimal counts agree with exhaustive enumeration", "[pollock]") {
  const auto oracle_counts = oracle::brute_force_min_terms(500, 5);
  const Pool pool = platonic_pool(500);
  for (int m = 1; m <= 500; ++m) {
    const auto w = min_term_decomposition(m, pool, 5);
    INFO(m);
    REQUIRE(oracle_counts[m] != 0);
    REQUIRE(w);
    REQUIRE(verify_witness(*w));
    REQUIRE(static_cast<int>(w->terms.size()) == oracle_counts[m]);
  }

  ScanOptions options;
  options.keep_witnesses = true;
  const ScanReport report = scan_conjecture(500, options);
  REQUIRE(report.witnesses);
  for (const Witness& w : *report.witnesses) {
    const int m = w.target.convert_to<int>();
    REQUIRE(static_cast<int>(w.terms.size()) == oracle_counts[m]);
    REQUIRE(verify_witness(w));
  }
  CHECK(report.histogram == std::vector<std::uint64_t>{32, 287, 181, 0, 0});
}

TEST_CASE("scan_conjecture", "[pollock]") {
  SECTION("N = 120") {
    const ScanReport r = scan_conjecture(120);
    CHECK(r.failures.empty());
    CHECK(r.histogram == std::vector<std::uint64_t>{17, 73, 30, 0, 0});
  }
  SECTION("N = 1, one term") {
    ScanOptions options;
    options.max_terms = 1;
    const ScanReport r = scan_conjecture(1, options);
    CHECK(r.histogram == std::vector<std::uint64_t>{1});
    CHECK(r.failures.empty());
  }
  SECTION("small budget produces failures") {
    ScanOptions options;
    options.max_terms = 1;
    const ScanReport r = scan_conjecture(10, options);
    CHECK(r.histogram == std::vector<std::uint64_t>{5});
    CHECK(r.failures == std::vector<std::uint64_t>{2, 3, 5, 7, 9});
    CHECK_FALSE(r.conjecture_holds());
  }
  SECTION("distinct values fail at 2 and 3") {
    ScanOptions options;
    options.policy = TermPolicy::Distinct;
    options.keep_witnesses = true;
    const ScanReport r = scan_conjecture(2000, options);
    CHECK(r.failures == std::vector<std::uint64_t>{2, 3});
    CHECK(r.histogram == std::vector<std::uint64_t>{53, 914, 1031, 0, 0});
    for (const Witness& w : *r.witnesses) REQUIRE(verify_witness(w, TermPolicy::Distinct));
  }
  SECTION("resource guard") {
    ScanOptions options;
    options.ceiling = 1000;
    CHECK_THROWS_AS(scan_conjecture(1001, options), ResourceLimit);
    CHECK_THROWS_AS(scan_conjecture(0, options), DomainError);
  }
  SECTION("streamed witnesses arrive in order and are not stored") {
    ScanOptions options;
    options.keep_witnesses = true;
    std::uint64_t next = 1;
    const ScanReport r = scan_conjecture(300, options, [&](const Witness& w) {
      REQUIRE(w.target == next);
      REQUIRE(verify_witness(w));
      ++next;
    });
    CHECK(next == 301);
    CHECK_FALSE(r.witnesses);
  }
}

TEST_CASE("scan results do not depend on the thread count", "[pollock]") {
  ScanOptions base;
  base.keep_witnesses = true;
  const ScanReport single = scan_conjecture(20'000, base);
  for (unsigned threads : {2U, 3U, 8U, 0U}) {
    ScanOptions options = base;
    options.threads = threads;
    const ScanReport multi = scan_conjecture(20'000, options);
    REQUIRE(multi.histogram == single.histogram);
    REQUIRE(multi.failures == single.failures);
    for (std::size_t i = 0; i < single.witnesses->size(); ++i) {
      REQUIRE(term_values((*multi.witnesses)[i]) == term_values((*single.witnesses)[i]));
    }
  }
}
