#include "doctest.h"

#include "reduce.hpp"
#include "rng.hpp"

using namespace gm;

namespace {

RatMatrix mat(size_t d, std::vector<std::string> entries) {
    std::vector<Rat> e;
    for (auto& s : entries) e.push_back(parse_rat(s));
    return RatMatrix(d, std::move(e));
}

void check_reduction(const RatMatrix& A, const RatMatrix& B) {
    ReducedLattice R = reduce_lattice_pair(A, B);
    CHECK(R.D.is_diagonal());
    for (size_t i = 0; i < R.dim(); ++i) CHECK(R.D.at(i, i) > 0);
    CHECK(abs_rat(R.pair.P.det()) == 1);
    CHECK(abs_rat(R.pair.Q.det()) == 1);
    CHECK(R.pair.P.is_integer_matrix());
    CHECK(R.pair.Q.is_integer_matrix());
    // P (B^t A) Q D = I exactly.
    CHECK(R.pair.P * (B.transpose() * A) * R.pair.Q * R.D == RatMatrix::identity(R.dim()));
    CHECK(R.d0 * abs_rat(R.D.det()) == 1);
    CHECK(Rat(R.gamma) >= R.d0);
    CHECK(Rat(R.gamma) < R.d0 + 1);
}

}  // namespace

TEST_CASE("identity lattice pair reduces to D = I") {
    auto R = reduce_lattice_pair(RatMatrix::identity(1), RatMatrix::identity(1));
    CHECK(R.D == RatMatrix::identity(1));
    CHECK(R.d0 == 1);
    CHECK(R.gamma == 1);
}

TEST_CASE("scalar pair A=1, B=3/2") {
    auto R = reduce_lattice_pair(mat(1, {"1"}), mat(1, {"3/2"}));
    CHECK(R.D == RatMatrix::diagonal({parse_rat("2/3")}));
    CHECK(R.d0 == parse_rat("3/2"));
    CHECK(R.gamma == 2);
    check_reduction(mat(1, {"1"}), mat(1, {"3/2"}));
}

TEST_CASE("2x2 pair with (B^t A)^{-1} = (1/6)[[2,1],[0,3]]") {
    // B^t = ((1/6)[[2,1],[0,3]])^{-1} = [[3,-1],[0,2]]
    auto A = RatMatrix::identity(2);
    auto B = mat(2, {"3", "0", "-1", "2"});
    auto R = reduce_lattice_pair(A, B);
    CHECK(R.D == RatMatrix::diagonal({parse_rat("1/6"), Rat(1)}));
    CHECK(R.d0 == 6);
    CHECK(R.gamma == 6);
    check_reduction(A, B);
}

TEST_CASE("singular inputs are rejected") {
    CHECK_THROWS_AS(reduce_lattice_pair(mat(1, {"0"}), mat(1, {"1"})), Error);
    CHECK_THROWS_AS(reduce_lattice_pair(mat(1, {"1"}), mat(1, {"0"})), Error);
}

TEST_CASE("random rational pairs satisfy the reduction contract") {
    Rng rng(987654321);
    for (int trial = 0; trial < 40; ++trial) {
        size_t d = 1 + rng.below(3);
        auto rand_mat = [&] {
            RatMatrix M(d);
            do {
                for (size_t i = 0; i < d; ++i)
                    for (size_t j = 0; j < d; ++j)
                        M.at(i, j) = make_rat(Int(rng.int_in(-6, 6)), Int(rng.int_in(1, 12)));
            } while (M.det() == 0);
            return M;
        };
        check_reduction(rand_mat(), rand_mat());
    }
}

TEST_CASE("transform_point round trip") {
    auto A = mat(2, {"2", "1", "0", "1"});
    auto Q = mat(2, {"1", "1", "0", "1"});
    RatVec x{parse_rat("5/3"), parse_rat("-1/2")};
    auto z = transform_point(x, TransformDir::forward, Q, A);
    auto back = transform_point(z, TransformDir::inverse, Q, A);
    CHECK(back == x);

    auto id = RatMatrix::identity(1);
    RatVec y{parse_rat("5/3")};
    CHECK(transform_point(y, TransformDir::forward, id, id) == y);
}
