#include <doctest.h>

#include <algorithm>

#include "dlat/enumerate.hpp"
#include "dlat/harness.hpp"
#include "dlat/lattice_decoder.hpp"
#include "oracles.hpp"

using namespace dlat;

namespace {

ConstructionDLattice bch_lattice(unsigned r, std::size_t ell) { return lattice_make(tower_make(field_make(2, r), ell)); }

// Component decoder that scans every codeword of C_i and keeps those within
// p^i e0 on the torus.
ComponentDecoder brute_force_decoder(const CodeTower& t, double e0) {
  std::vector<std::vector<FpVec>> words(t.ell + 1);
  for (std::size_t i = 1; i <= t.ell; ++i)
    words[i] = oracle::span_all(FpMatrix(t.basis.begin(), t.basis.begin() + t.dims[i]), t.p, t.n);
  return [words, e0](std::size_t level, const TorusWord& w) {
    const double e = std::pow(double(w.p), double(level)) * e0;
    std::vector<FpVec> out;
    for (const auto& c : words[level])
      if (torus_dist_sq(w, c) <= e * e + 1e-9) out.push_back(c);
    return out;
  };
}

}  // namespace

TEST_CASE("rounding examples") {
  std::vector<double> y{0.2, -0.4, 2.7};
  IntVec zero{0, 0, 0};
  CHECK(round_decode_z(y, zero, 2) == IntVec{0, 0, 2});
  CHECK(round_decode_z(y, zero, 3) == IntVec{0, 0, 3});
  std::vector<double> yi{3, -2, 7};
  CHECK(round_decode_z(yi, IntVec{1, 0, 1}, 2) == IntVec{3, -2, 7});
  std::vector<double> tie{1.0, -1.0};
  CHECK(round_decode_z(tie, IntVec{0, 0}, 2) == IntVec{2, 0});  // half-integers round up
  CHECK(round_half_up(-0.5) == 0);
  CHECK(round_half_up(2.5) == 3);
}

TEST_CASE("base case on Z^n") {
  auto lat = bch_lattice(4, 0);
  LatticeDecoder dec(lat, 0.6, [](std::size_t, const TorusWord&) -> std::vector<FpVec> { throw std::logic_error("unused"); });
  std::vector<double> y(15, 0.0);
  y[3] = 2.3;
  y[4] = -0.2;
  DecodeAudit audit;
  auto out = dec.decode(y, 0, &audit);
  IntVec want(15, 0);
  want[3] = 2;
  REQUIRE(out.size() == 1);
  CHECK(out[0] == want);
  CHECK(audit.calls == std::vector<std::size_t>{1});
  CHECK(audit_consistent(audit));
  y[5] = 0.5;
  y[6] = 0.5;  // distance sqrt(0.3^2 + 0.2^2 + 0.5) > 0.6
  CHECK(dec.decode(y, 0).empty());
}

TEST_CASE("enumeration examples") {
  auto lat = bch_lattice(4, 0);
  std::vector<double> zero(15, 0.0);
  CHECK(enumerate_ball(lat.basis_int, zero, 1.0).size() == 31);
  auto l1 = bch_lattice(4, 1);
  auto g = stream_rng(91, 0);
  for (int t = 0; t < 20; ++t) {
    IntVec v = sample_lattice_vector(l1, 2, g);
    std::vector<double> y(v.begin(), v.end());
    CHECK(enumerate_ball(l1.basis_int, y, 0.0) == std::vector<IntVec>{v});
  }
  std::vector<double> y16(16, 0.0);
  auto big = lattice_make(tower_make(field_make(2, 5), 1));
  std::vector<double> y31(31, 0.0);
  CHECK_THROWS_AS(enumeration_oracle(big, y31, 1.0), std::invalid_argument);
}

TEST_CASE("serial and parallel enumeration agree") {
  for (auto [r, ell] : std::vector<std::pair<unsigned, std::size_t>>{{4, 1}, {3, 1}}) {
    auto lat = bch_lattice(r, ell);
    auto g = stream_rng(92, r);
    for (int t = 0; t < 20; ++t) {
      std::vector<double> y(lat.n());
      for (auto& x : y) x = uniform_real(g, -3, 3);
      double radius = uniform_real(g, 0.5, 2.5);
      auto s = enumerate_ball(lat.basis_int, y, radius);
      CHECK(s == enumerate_ball_parallel(lat.basis_int, y, radius));
      for (const auto& v : s) CHECK(euclid_distance(y, v) <= radius + 1e-9);
    }
  }
}

TEST_CASE("recursive decoder equals enumeration on the n = 15 lattice") {
  auto lat = bch_lattice(4, 1);
  for (double eps : {0.1, 0.25, 0.5}) {
    LatticeDecoder dec = LatticeDecoder::for_bch(lat, eps);
    const double radius = 2 * std::sqrt((1 - eps) / 2);
    CHECK(dec.radius(1) == doctest::Approx(radius));
    auto g = stream_rng(93, static_cast<std::uint64_t>(eps * 100));
    std::size_t nonempty = 0;
    for (int t = 0; t < 40; ++t) {
      auto y = oracle_target(lat, radius, g);
      DecodeAudit audit;
      auto got = dec.decode(y, 1, &audit);
      auto want = enumeration_oracle(lat, y, radius);
      REQUIRE(got == want);
      CHECK(audit_consistent(audit));
      nonempty += !want.empty();
    }
    CHECK(nonempty > 10);
  }
}

TEST_CASE("far targets decode to the empty list") {
  auto lat = bch_lattice(4, 1);
  LatticeDecoder dec = LatticeDecoder::for_bch(lat, 0.25);
  const double radius = dec.radius(1);
  auto g = stream_rng(94, 0);
  int found = 0;
  for (int t = 0; t < 200 && found < 10; ++t) {
    std::vector<double> y(15);
    for (auto& x : y) x = uniform_real(g, 0, 2);
    if (!enumeration_oracle(lat, y, radius).empty()) continue;
    ++found;
    CHECK(dec.decode(y, 1).empty());
  }
  CHECK(found == 10);
}

TEST_CASE("generic recursion over F_3 matches enumeration") {
  for (auto t : {tower_from_generators(3, 2, {{{1, 2}}, {{1, 2}}}), tower_from_basis(3, 2, {2, 1, 1}, {{2, 1}, {0, 1}})}) {
    auto lat = lattice_make(t);
    LatticeDecoder dec(lat, 1.2, brute_force_decoder(t, 1.2));
    auto g = stream_rng(95, 0);
    for (int s = 0; s < 200; ++s) {
      std::vector<double> y{uniform_real(g, -20, 20), uniform_real(g, -20, 20)};
      for (std::size_t level = 0; level <= 2; ++level) {
        DecodeAudit audit;
        auto got = dec.decode(y, level, &audit);
        REQUIRE(audit_consistent(audit));
        if (level == 2) REQUIRE(got == enumerate_ball(lat.basis_int, y, dec.radius(2)));
        for (const auto& v : got) REQUIRE(member(lat, v, level));
      }
    }
  }
}

TEST_CASE("call audit follows the recursion tree") {
  auto lat = bch_lattice(6, 2);
  auto g = stream_rng(96, 0);
  const double radius = 4 * std::sqrt(0.375);
  for (int t = 0; t < 10; ++t) {
    auto y = oracle_target(lat, radius, g);
    auto r = bch_lattice_decode(lat, y, 0.25);
    CHECK(audit_consistent(r.audit));
    CHECK(r.audit.calls[2] == 1);
    for (double d : r.distances) CHECK(d <= r.radius + 1e-9);
  }
  DecodeAudit bad{{3, 2, 1}, {2, 2, 1}};
  CHECK_FALSE(audit_consistent(bad));
}

TEST_CASE("decoder argument checks") {
  auto lat = bch_lattice(4, 1);
  auto none = [](std::size_t, const TorusWord&) { return std::vector<FpVec>{}; };
  CHECK_THROWS_AS(LatticeDecoder(lat, 1.0, none), std::invalid_argument);
  CHECK_THROWS_AS(LatticeDecoder(lat, 0.0, none), std::invalid_argument);
  LatticeDecoder dec(lat, 0.5, none);
  std::vector<double> y(15, 0.0), short_y(3, 0.0);
  CHECK_THROWS_AS(dec.decode(y, 2), std::invalid_argument);
  CHECK_THROWS_AS(dec.decode(short_y, 1), std::invalid_argument);
  CHECK_THROWS_AS(LatticeDecoder::for_bch(lat, 1.0), std::invalid_argument);

  LatticeDecoder failing(lat, 0.5, [](std::size_t, const TorusWord&) -> std::vector<FpVec> {
    throw std::runtime_error("boom");
  });
  try {
    failing.decode(y, 1);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("level 1") != std::string::npos);
  }

  // a far codeword from the component decoder is pruned one level down
  auto t = lat.tower;
  LatticeDecoder loose(lat, 0.5, [t](std::size_t, const TorusWord&) { return std::vector<FpVec>{t.basis[0]}; });
  CHECK(loose.decode(y, 1).empty());
}
