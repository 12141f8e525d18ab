#include "doctest.h"

#include "casazza.hpp"
#include "multiplier.hpp"

using namespace gm;

namespace {

ReducedLattice diag_lattice(std::vector<std::string> entries) {
    RatVec d;
    for (auto& s : entries) d.push_back(parse_rat(s));
    return reduced_from_diagonal(RatMatrix::diagonal(d));
}

ExactScalar cval(size_t dim, const std::string& re, const std::string& im) {
    return ExactScalar::constant(dim, CycQ::from_complex(parse_rat(re), parse_rat(im)));
}

Box interval(const std::string& lo, const std::string& hi) {
    return make_box({parse_rat(lo)}, {parse_rat(hi)});
}

// scalar h given as values on an equal split of [0, span)
MultiplierSpec scalar_pattern(const std::string& span, std::vector<std::pair<std::string, std::string>> vals) {
    Rat s = parse_rat(span);
    Rat step = s / Rat(Int(vals.size()));
    std::vector<MultPiece> pieces;
    for (size_t t = 0; t < vals.size(); ++t) {
        Box b = make_box({Rat(Int(t)) * step}, {Rat(Int(t + 1)) * step});
        pieces.push_back(MultPiece{b, {{cval(1, vals[t].first, vals[t].second)}}});
    }
    return MultiplierSpec(1, 1, make_box({Rat(0)}, {s}), std::move(pieces));
}

MultiplierSpec constant_matrix(size_t gamma, size_t dim, std::vector<std::vector<ExactScalar>> m) {
    Box cell = make_box(zero_vec(dim), RatVec(dim, Rat(1)));
    return MultiplierSpec(gamma, dim, cell, {MultPiece{cell, std::move(m)}});
}

}  // namespace

TEST_CASE("constant unitary passes all conditions") {
    auto R = diag_lattice({"2/3"});
    auto M = constant_matrix(2, 1, {{cval(1, "3/5", "0"), cval(1, "4/5", "0")},
                                    {cval(1, "-4/5", "0"), cval(1, "3/5", "0")}});
    auto v = check_conditions(M, R);
    CHECK(v.unitary_ae);
    CHECK(v.cond2_scalar);
    CHECK(v.cond3_periodic);
    CHECK(v.is_multiplier);
    CHECK(v.certified);
}

TEST_CASE("rational character is a certified multiplier") {
    auto R = diag_lattice({"2/3"});
    Box cell = interval("0", "1");
    auto h = ExactScalar::character(1, {parse_rat("5/7")});
    std::vector<MultPiece> pieces{MultPiece{cell, {{h, ExactScalar::zero(1)},
                                                   {ExactScalar::zero(1), h}}}};
    auto M = MultiplierSpec(2, 1, cell, std::move(pieces));
    auto v = check_conditions(M, R);
    CHECK(v.is_multiplier);
    CHECK(v.certified);
}

TEST_CASE("characters with mismatched frequencies fail condition 2") {
    auto R = diag_lattice({"2/3"});
    Box cell = interval("0", "1");
    // diag(e^{2 pi i x/2}, 1): product matrix has unequal diagonal phases
    std::vector<MultPiece> pieces{
        MultPiece{cell, {{ExactScalar::character(1, {parse_rat("1/2")}), ExactScalar::zero(1)},
                         {ExactScalar::zero(1), ExactScalar::constant(1, CycQ::one())}}}};
    auto M = MultiplierSpec(2, 1, cell, std::move(pieces));
    auto v = check_conditions(M, R);
    CHECK(v.unitary_ae);
    CHECK(!v.cond2_scalar);
    CHECK(!v.is_multiplier);
    REQUIRE(v.violation.has_value());
    CHECK(v.violation->condition == 2);
}

TEST_CASE("non-unitary constant fails condition 1 only") {
    auto R = diag_lattice({"2/3"});
    auto M = constant_matrix(2, 1, {{cval(1, "2", "0"), cval(1, "0", "0")},
                                    {cval(1, "0", "0"), cval(1, "2", "0")}});
    auto v = check_conditions(M, R);
    CHECK(!v.unitary_ae);
    CHECK(!v.is_multiplier);
    REQUIRE(v.violation.has_value());
    CHECK(v.violation->condition == 1);
}

TEST_CASE("the 4-periodic sign pattern (1,-1,-1,1) with D = 2 is a multiplier") {
    auto R = diag_lattice({"2"});
    auto M = scalar_pattern("4", {{"1", "0"}, {"-1", "0"}, {"-1", "0"}, {"1", "0"}});
    auto v = check_conditions(M, R);
    CHECK(v.is_multiplier);
    CHECK(v.certified);
    auto vs = check_scalar_conditions(M, R);
    CHECK(vs.is_multiplier == v.is_multiplier);
}

TEST_CASE("the 4-periodic pattern (1,1,-1,1) with D = 2 breaks condition 3") {
    auto R = diag_lattice({"2"});
    auto M = scalar_pattern("4", {{"1", "0"}, {"1", "0"}, {"-1", "0"}, {"1", "0"}});
    auto v = check_conditions(M, R);
    CHECK(v.unitary_ae);
    CHECK(v.cond2_scalar);
    CHECK(!v.cond3_periodic);
    CHECK(!v.is_multiplier);
    CHECK(v.certified);
    REQUIRE(v.violation.has_value());
    CHECK(v.violation->condition == 3);
    auto vs = check_scalar_conditions(M, R);
    CHECK(!vs.is_multiplier);
    CHECK(vs.violation->condition == 3);
}

TEST_CASE("scalar and matrix checkers agree across a corpus") {
    auto R = diag_lattice({"2"});
    auto R2 = diag_lattice({"3/2"});
    std::vector<MultiplierSpec> corpus;
    corpus.push_back(scalar_pattern("1", {{"1", "0"}}));
    corpus.push_back(scalar_pattern("1", {{"0", "1"}}));
    corpus.push_back(scalar_pattern("2", {{"1", "0"}, {"-1", "0"}}));
    corpus.push_back(scalar_pattern("4", {{"1", "0"}, {"1", "0"}, {"-1", "0"}, {"1", "0"}}));
    corpus.push_back(scalar_pattern("4", {{"1", "0"}, {"0", "1"}, {"-1", "0"}, {"0", "-1"}}));
    corpus.push_back(scalar_pattern("1", {{"2", "0"}}));  // not unimodular
    {
        Box cell = interval("0", "1");
        std::vector<MultPiece> pieces{
            MultPiece{cell, {{ExactScalar::character(1, {parse_rat("3/4")})}}}};
        corpus.push_back(MultiplierSpec(1, 1, cell, std::move(pieces)));
    }
    for (const auto& M : corpus) {
        auto v1 = check_conditions(M, R);
        auto v2 = check_scalar_conditions(M, R);
        CHECK(v1.is_multiplier == v2.is_multiplier);
        auto w1 = check_conditions(M, R2);
        auto w2 = check_scalar_conditions(M, R2);
        CHECK(w1.is_multiplier == w2.is_multiplier);
    }
}

TEST_CASE("apply with the identity returns an equal generator") {
    auto R = diag_lattice({"2/3"});
    auto G = generator_from_multitile(build_multitile(R));
    auto M = constant_matrix(2, 1, {{cval(1, "1", "0"), cval(1, "0", "0")},
                                    {cval(1, "0", "0"), cval(1, "1", "0")}});
    auto H = apply_multiplier(M, G);
    CHECK(verify_casazza(H, R).is_parseval);
    CHECK(H.support() == G.support());
}

TEST_CASE("applying sign flips and swaps preserves Parseval") {
    auto R = diag_lattice({"2/3"});
    auto G = generator_from_multitile(build_multitile(R));
    auto Mdiag = constant_matrix(2, 1, {{cval(1, "-1", "0"), cval(1, "0", "0")},
                                        {cval(1, "0", "0"), cval(1, "1", "0")}});
    auto Mswap = constant_matrix(2, 1, {{cval(1, "0", "0"), cval(1, "1", "0")},
                                        {cval(1, "1", "0"), cval(1, "0", "0")}});
    CHECK(verify_casazza(apply_multiplier(Mdiag, G), R).is_parseval);
    CHECK(verify_casazza(apply_multiplier(Mswap, G), R).is_parseval);
}

TEST_CASE("applying a character multiplier preserves Parseval exactly") {
    auto R = diag_lattice({"2/3"});
    auto G = generator_from_multitile(build_multitile(R));
    Box cell = interval("0", "1");
    auto h = ExactScalar::character(1, {parse_rat("1/3")});
    std::vector<MultPiece> pieces{MultPiece{cell, {{h, ExactScalar::zero(1)},
                                                   {ExactScalar::zero(1), h}}}};
    auto M = MultiplierSpec(2, 1, cell, std::move(pieces));
    REQUIRE(check_conditions(M, R).is_multiplier);
    auto H = apply_multiplier(M, G);
    CHECK(verify_casazza(H, R).is_parseval);
}

TEST_CASE("forward verification across a small corpus") {
    auto R = diag_lattice({"2/3"});
    auto mt = build_multitile(R);
    std::vector<PCGenerator> corpus;
    corpus.push_back(generator_from_multitile(mt));
    corpus.push_back(generator_from_multitile(mt, pair_basis(2, 0, 1, false)));
    corpus.push_back(generator_from_multitile(mt, pair_basis(2, 0, 1, true)));
    auto M = constant_matrix(2, 1, {{cval(1, "0", "1"), cval(1, "0", "0")},
                                    {cval(1, "0", "0"), cval(1, "-1", "0")}});
    REQUIRE(check_conditions(M, R).is_multiplier);
    auto rep = forward_verify(M, corpus, R);
    CHECK(rep.checked == 3);
    CHECK(rep.preserved == 3);
}

TEST_CASE("multiplier composition stays a multiplier") {
    auto R = diag_lattice({"2/3"});
    auto A = constant_matrix(2, 1, {{cval(1, "3/5", "0"), cval(1, "4/5", "0")},
                                    {cval(1, "-4/5", "0"), cval(1, "3/5", "0")}});
    auto B = constant_matrix(2, 1, {{cval(1, "0", "1"), cval(1, "0", "0")},
                                    {cval(1, "0", "0"), cval(1, "0", "-1")}});
    // product of the two constant matrices
    std::vector<std::vector<ExactScalar>> prod(2, std::vector<ExactScalar>(2, ExactScalar::zero(1)));
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t t = 0; t < 2; ++t)
                prod[i][j] = prod[i][j] + A.pieces()[0].matrix[i][t] * B.pieces()[0].matrix[t][j];
    auto AB = constant_matrix(2, 1, prod);
    CHECK(check_conditions(A, R).is_multiplier);
    CHECK(check_conditions(B, R).is_multiplier);
    CHECK(check_conditions(AB, R).is_multiplier);
}

TEST_CASE("piecewise unitary pattern violating condition 2") {
    // I on [0,1/3) u [2/3,1), swap on [1/3,2/3): the 2/3-shift mixes them
    auto R = diag_lattice({"2/3"});
    auto I2 = std::vector<std::vector<ExactScalar>>{{cval(1, "1", "0"), cval(1, "0", "0")},
                                                    {cval(1, "0", "0"), cval(1, "1", "0")}};
    auto SW = std::vector<std::vector<ExactScalar>>{{cval(1, "0", "0"), cval(1, "1", "0")},
                                                    {cval(1, "1", "0"), cval(1, "0", "0")}};
    std::vector<MultPiece> pieces{MultPiece{interval("0", "1/3"), I2},
                                  MultPiece{interval("1/3", "2/3"), SW},
                                  MultPiece{interval("2/3", "1"), I2}};
    auto M = MultiplierSpec(2, 1, interval("0", "1"), std::move(pieces));
    auto v = check_conditions(M, R);
    CHECK(v.unitary_ae);
    CHECK(!v.cond2_scalar);
    CHECK(v.certified);
    REQUIRE(v.violation.has_value());
    CHECK(v.violation->condition == 2);
    CHECK(v.violation->offdiag);
}

TEST_CASE("lambda functions are recorded for certified multipliers") {
    auto R = diag_lattice({"2"});
    auto M = scalar_pattern("2", {{"1", "0"}, {"-1", "0"}});
    auto v = check_conditions(M, R);
    CHECK(v.is_multiplier);
    CHECK(!v.lambdas.empty());
    for (const auto& lf : v.lambdas)
        for (const auto& [cell, val] : lf.pieces) {
            // |lambda| = 1 wherever condition 2 holds
            CHECK(val * val.conj() == ExactScalar::constant(1, CycQ::one()));
        }
}
