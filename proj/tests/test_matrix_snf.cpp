#include <catch2/catch_amalgamated.hpp>

#include "abelian/matrix.hpp"
#include "abelian/snf.hpp"
#include "abelian/subgroup.hpp"
#include "test_util.hpp"

using namespace abelian;

namespace {

// Cofactor expansion; cross-checks the Bareiss determinant on small inputs.
BigInt det_by_cofactors(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    BigInt term = a(0, j) * det_by_cofactors(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

IntMatrix random_matrix(testutil::Rng& rng, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.in_range(-9, 9);
  return m;
}

void check_snf_contract(const IntMatrix& a, const SnfResult& snf) {
  REQUIRE(snf.U.rows() == a.rows());
  REQUIRE(snf.V.cols() == a.cols());
  CHECK(snf.U * a * snf.V == snf.D);
  BigInt det_u = determinant(snf.U);
  BigInt det_v = determinant(snf.V);
  CHECK((det_u == 1 || det_u == -1));
  CHECK((det_v == 1 || det_v == -1));
  auto diag = snf.diagonal();
  bool seen_zero = false;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (diag[i] == 0) seen_zero = true;
    if (seen_zero) CHECK(diag[i] == 0);  // zeros trail
    if (i > 0 && diag[i - 1] != 0 && diag[i] != 0) CHECK(diag[i] % diag[i - 1] == 0);
  }
  // off-diagonal entries vanish
  for (std::size_t i = 0; i < snf.D.rows(); ++i)
    for (std::size_t j = 0; j < snf.D.cols(); ++j)
      if (i != j) CHECK(snf.D(i, j) == 0);
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  testutil::Rng rng(0x00d5a11e5u);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.in_range(1, 3));
    IntMatrix a = random_matrix(rng, n, n);
    CHECK(determinant(a) == det_by_cofactors(a));
  }
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("smith normal form on pinned examples") {
  SECTION("identity is already in normal form") {
    IntMatrix a = IntMatrix::identity(2);
    auto snf = smith_normal_form(a);
    CHECK(snf.D == a);
    check_snf_contract(a, snf);
  }
  SECTION("zero matrix is a fixed point") {
    IntMatrix a(1, 1);
    auto snf = smith_normal_form(a);
    CHECK(snf.D(0, 0) == 0);
    check_snf_contract(a, snf);
  }
  SECTION("[[2,4],[0,6]] reduces to diag(2,6)") {
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {0, 6}});
    auto snf = smith_normal_form(a);
    CHECK(snf.diagonal() == std::vector<BigInt>{2, 6});
    check_snf_contract(a, snf);
  }
  SECTION("rejects empty shapes") {
    CHECK_THROWS_AS(smith_normal_form(IntMatrix(0, 2)), std::invalid_argument);
    CHECK_THROWS_AS(smith_normal_form(IntMatrix(3, 0)), std::invalid_argument);
  }
}

TEST_CASE("smith normal form contract on 500 random matrices") {
  testutil::Rng rng(0x5441f00du);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t rows = static_cast<std::size_t>(rng.in_range(1, 5));
    std::size_t cols = static_cast<std::size_t>(rng.in_range(1, 5));
    IntMatrix a = random_matrix(rng, rows, cols);
    auto snf = smith_normal_form(a);
    check_snf_contract(a, snf);

    // idempotence on the diagonal output
    auto again = smith_normal_form(snf.D);
    CHECK(again.D == snf.D);
  }
}

TEST_CASE("quotient_invariants on pinned examples") {
  SECTION("(Z/4 x Z/2) / <(2,1)> is Z/4") {
    auto q = quotient_invariants({4, 2}, {{2, 1}});
    CHECK(q.invariant_factors == std::vector<std::int64_t>{4});
  }
  SECTION("quotient by nothing returns the cyclic factor") {
    for (std::int64_t n : {2, 5, 12, 97})
      CHECK(quotient_invariants({n}, {}).invariant_factors == std::vector<std::int64_t>{n});
  }
  SECTION("Klein group modulo a diagonal line") {
    auto q = quotient_invariants({2, 2}, {{1, 1}});
    CHECK(q.invariant_factors == std::vector<std::int64_t>{2});
  }
  SECTION("trivial ambient") {
    auto q = quotient_invariants({}, {});
    CHECK(q.invariant_factors.empty());
  }
  SECTION("full quotient collapses to nothing") {
    auto q = quotient_invariants({2, 2}, {{1, 0}, {0, 1}});
    CHECK(q.invariant_factors.empty());
  }
}

TEST_CASE("quotient projection kills exactly the relation subgroup") {
  testutil::Rng rng(0x9a0b1c2du);
  for (int trial = 0; trial < 40; ++trial) {
    FinAbGroup ambient = testutil::random_group(rng, 64);
    std::vector<GroupElement> gens;
    int count = static_cast<int>(rng.in_range(0, 2));
    for (int i = 0; i < count; ++i) gens.push_back(testutil::random_nonzero(rng, ambient));

    std::vector<std::vector<std::int64_t>> gen_coords;
    for (const auto& g : gens) gen_coords.push_back(g.coords);
    auto q = quotient_invariants(ambient.moduli(), gen_coords);

    auto relation_subgroup = testutil::closure_oracle(ambient, gens);
    std::set<GroupElement> relation_set(relation_subgroup.begin(), relation_subgroup.end());

    // the projection is a homomorphism whose kernel is exactly <gens>
    std::int64_t quotient_order = 1;
    for (std::int64_t f : q.invariant_factors) quotient_order *= f;
    CHECK(quotient_order * static_cast<std::int64_t>(relation_subgroup.size()) ==
          ambient.order());

    for (const auto& x : ambient.elements()) {
      auto px = q.project(x.coords);
      bool projects_to_zero =
          std::all_of(px.begin(), px.end(), [](std::int64_t c) { return c == 0; });
      CHECK(projects_to_zero == (relation_set.count(x) > 0));
    }
  }
}
