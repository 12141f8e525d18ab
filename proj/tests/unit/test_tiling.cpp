#include "doctest.h"

#include "tiling.hpp"

using namespace gm;

namespace {

ReducedLattice diag_lattice(std::vector<std::string> entries) {
    RatVec d;
    for (auto& s : entries) d.push_back(parse_rat(s));
    return reduced_from_diagonal(RatMatrix::diagonal(d));
}

BoxSet set1(std::vector<std::pair<std::string, std::string>> iv) {
    std::vector<Box> bs;
    for (auto& [a, b] : iv) bs.push_back(make_box({parse_rat(a)}, {parse_rat(b)}));
    return BoxSet::from_boxes(1, std::move(bs));
}

// Lemma 5.1 predicate battery; the region algebra is the oracle.
void check_multitile(const ReducedLattice& R, const MultiTile& mt) {
    auto L = time_lattice(R);
    auto K = frequency_lattice(R);
    size_t gamma = size_t(R.gamma);
    REQUIRE(mt.E.size() == gamma);
    BoxSet all(R.dim());
    for (size_t g = 0; g < gamma; ++g) {
        if (g > 0) {
            CHECK(mt.E[g].measure() == Rat(1) / R.d0);
            CHECK(tiles(mt.E[g], K));
        }
        all = all.unite(mt.E[g]);
        for (size_t h = g + 1; h < gamma; ++h) {
            CHECK(!overlaps(mt.E[g], mt.E[h]));
            CHECK(lattice_disjoint(mt.E[g], mt.E[h], L));
        }
    }
    CHECK(mt.E[0].measure() > 0);
    CHECK(mt.E[0].measure() <= Rat(1) / R.d0);
    CHECK(packs(mt.E[0], K));
    CHECK(tiles(all, L));
}

}  // namespace

TEST_CASE("partition pair for D = 2/3") {
    auto R = diag_lattice({"2/3"});
    auto pp = build_partition_pair(R);
    CHECK(pp.M1 == 3);
    CHECK(pp.M2 == 2);
    CHECK(pp.mu0 == parse_rat("1/3"));
    CHECK(pp.P[0] == make_box({Rat(0)}, {parse_rat("1/3")}));
    CHECK(pp.P[2] == make_box({parse_rat("2/3")}, {Rat(1)}));
    CHECK(pp.Pprime[1] == make_box({parse_rat("1/3")}, {parse_rat("2/3")}));
    BoxSet omega(1);
    for (const auto& c : pp.P) omega = omega.unite(BoxSet::from_box(c));
    CHECK(omega == set1({{"0", "1"}}));
    BoxSet domega(1);
    for (const auto& c : pp.Pprime) domega = domega.unite(BoxSet::from_box(c));
    CHECK(domega == set1({{"0", "2/3"}}));
}

TEST_CASE("partition pair for D = I and diag(1/2,3)") {
    auto R1 = diag_lattice({"1", "1"});
    auto pp1 = build_partition_pair(R1);
    CHECK(pp1.M1 == 1);
    CHECK(pp1.M2 == 1);
    CHECK(pp1.P == pp1.Pprime);

    auto R2 = diag_lattice({"1/2", "3"});
    auto pp2 = build_partition_pair(R2);
    CHECK(pp2.M1 == 2);
    CHECK(pp2.M2 == 3);
    CHECK(pp2.P[0] == make_box({Rat(0), Rat(0)}, {parse_rat("1/2"), Rat(1)}));
    CHECK(pp2.Pprime[2] == make_box({Rat(0), Rat(2)}, {parse_rat("1/2"), Rat(3)}));
}

TEST_CASE("matchings for D = 2/3") {
    auto R = diag_lattice({"2/3"});
    auto pp = build_partition_pair(R);

    auto same = build_matching(pp, R, 1, 1);  // [1/3,2/3) with itself
    CHECK(same.region == pp.P[1]);
    CHECK(same.l0 == IntVec{0});
    CHECK(same.k0 == RatVec{Rat(0)});

    auto cross = build_matching(pp, R, 2, 0);  // [2/3,1) with [0,1/3)
    CHECK(cross.region == pp.P[2]);
    CHECK(cross.l0 == IntVec{0});
    CHECK(cross.k0 == RatVec{parse_rat("-2/3")});

    // matching region is L-equivalent to the Omega cell and K-equivalent
    // to the D*Omega cell
    auto L = time_lattice(R);
    auto K = frequency_lattice(R);
    for (size_t i = 0; i < pp.M1; ++i)
        for (size_t j = 0; j < pp.M2; ++j) {
            auto m = build_matching(pp, R, i, j);
            CHECK(lattice_equivalent(BoxSet::from_box(m.region), BoxSet::from_box(pp.P[i]), L));
            CHECK(lattice_equivalent(BoxSet::from_box(m.region), BoxSet::from_box(pp.Pprime[j]), K));
        }
}

TEST_CASE("multitile for D = 2/3 reproduces the two-set tiling") {
    auto R = diag_lattice({"2/3"});
    CHECK(R.gamma == 2);
    auto mt = build_multitile(R);
    CHECK(mt.E[1] == set1({{"0", "2/3"}}));  // E_2 = F_2 matchings
    CHECK(mt.E[0] == set1({{"2/3", "1"}}));  // E_1 = leftover cell
    check_multitile(R, mt);
}

TEST_CASE("multitile for D = I and D = 2") {
    auto RI = diag_lattice({"1"});
    auto mtI = build_multitile(RI);
    CHECK(mtI.E.size() == 1);
    CHECK(mtI.E[0] == set1({{"0", "1"}}));
    check_multitile(RI, mtI);

    auto R2 = diag_lattice({"2"});
    CHECK(R2.gamma == 1);
    auto mt2 = build_multitile(R2);
    CHECK(mt2.E[0] == set1({{"0", "1"}}));
    CHECK(tiles(mt2.E[0], time_lattice(R2)));
    CHECK(packs(mt2.E[0], frequency_lattice(R2)));
    check_multitile(R2, mt2);
}

TEST_CASE("multitile across a small diagonal corpus") {
    std::vector<std::vector<std::string>> corpus = {
        {"1/2"}, {"1/3"}, {"2/5"}, {"3/2"}, {"5/6"},
        {"2/3", "2/3"}, {"1/2", "2/3"}, {"1/2", "3"},
        {"1/2", "1", "1"}, {"2/3", "1", "3/2"},
    };
    for (const auto& entries : corpus) {
        auto R = diag_lattice(entries);
        check_multitile(R, build_multitile(R));
    }
}

TEST_CASE("pins are honored and conflicts rejected") {
    auto R = diag_lattice({"2/3"});
    // force cell 0 into group 1 matched with partner 1
    IntVec zero{0};
    auto mt = build_multitile(R, {Pin{0, 1, 1, std::nullopt}});
    CHECK(mt.groups[0][0].i == 0);
    CHECK(mt.groups[0][0].j == 1);
    check_multitile(R, mt);

    CHECK_THROWS_AS(build_multitile(R, {Pin{0, 1, 0, std::nullopt}, Pin{0, 1, 1, std::nullopt}}),
                    Error);
    CHECK_THROWS_AS(build_multitile(R, {Pin{0, 3, 0, std::nullopt}}), Error);
    CHECK_THROWS_AS(build_multitile(R, {Pin{0, 1, 0, std::nullopt}, Pin{1, 1, 1, std::nullopt}}),
                    Error);  // group 1 capacity is 1
    CHECK_THROWS_AS(build_multitile(R, {Pin{0, 2, 0, std::nullopt}, Pin{1, 2, 0, std::nullopt}}),
                    Error);  // duplicate partner
    CHECK_THROWS_AS(build_multitile(R, {Pin{0, 1, 1, std::make_pair(IntVec{0}, IntVec{1})}}),
                    Error);  // inconsistent translation
}

TEST_CASE("choose_box_pair in nonlattice mode") {
    auto R = diag_lattice({"2/3"});
    auto cbp = choose_box_pair(R, {parse_rat("2/3")}, BoxPairMode::nonlattice);
    auto Cset = BoxSet::from_box(cbp.C);
    CHECK(Cset.subtract(cbp.mt.E[0]).is_empty());
    CHECK(Cset.translated(-cbp.shift).subtract(cbp.mt.E[1]).is_empty());
    check_multitile(R, cbp.mt);

    auto R2 = diag_lattice({"2/3", "2/3"});
    auto cbp2 = choose_box_pair(R2, {parse_rat("2/3"), Rat(0)}, BoxPairMode::nonlattice);
    auto Cset2 = BoxSet::from_box(cbp2.C);
    CHECK(Cset2.subtract(cbp2.mt.E[0]).is_empty());
    CHECK(Cset2.translated(-cbp2.shift).subtract(cbp2.mt.E[1]).is_empty());
    check_multitile(R2, cbp2.mt);
}

TEST_CASE("choose_box_pair in lattice mode picks a short generator") {
    auto R = diag_lattice({"1/2"});
    auto cbp = choose_box_pair(R, {Rat(1)}, BoxPairMode::lattice);
    CHECK(cbp.shift == RatVec{parse_rat("1/2")});
    auto Cset = BoxSet::from_box(cbp.C);
    CHECK(Cset.subtract(cbp.mt.E[0]).is_empty());
    CHECK(Cset.translated(-cbp.shift).subtract(cbp.mt.E[1]).is_empty());
    check_multitile(R, cbp.mt);

    auto R2 = diag_lattice({"2", "1/3"});
    auto cbp2 = choose_box_pair(R2, {Rat(2), Rat(0)}, BoxPairMode::lattice);
    CHECK(cbp2.shift == RatVec{Rat(0), parse_rat("1/3")});
    check_multitile(R2, cbp2.mt);
}

TEST_CASE("choose_box_pair guards") {
    auto R = diag_lattice({"2/3"});
    CHECK_THROWS_AS(choose_box_pair(R, {parse_rat("2/3")}, BoxPairMode::lattice), Error);
    CHECK_THROWS_AS(choose_box_pair(R, {parse_rat("1/2")}, BoxPairMode::nonlattice), Error);
    CHECK_THROWS_AS(choose_box_pair(diag_lattice({"1"}), {Rat(1)}, BoxPairMode::lattice), Error);
}

TEST_CASE("scalar case sets for D = 3/2") {
    auto R = diag_lattice({"3/2"});
    CHECK(R.gamma == 1);
    auto s = choose_scalar_case_sets(R, IntVec{1}, {parse_rat("3/2")});
    auto L = time_lattice(R);
    auto K = frequency_lattice(R);
    CHECK(s.E3 == s.E2.translated({parse_rat("-3/2")}));
    CHECK(s.E4 == s.E2.translated({Rat(-1)}));
    CHECK(s.E5 == s.E2.translated({parse_rat("-5/2")}));
    CHECK(tiles(s.E1.unite(s.E2).unite(s.E3), L));
    CHECK(packs(s.E1.unite(s.E2).unite(s.E4), K));
}

TEST_CASE("scalar case sets in dimension 2") {
    auto R = diag_lattice({"3/2", "1"});
    auto s = choose_scalar_case_sets(R, IntVec{1, 0}, {parse_rat("3/2"), Rat(0)});
    auto L = time_lattice(R);
    auto K = frequency_lattice(R);
    CHECK(tiles(s.E1.unite(s.E2).unite(s.E3), L));
    CHECK(packs(s.E1.unite(s.E2).unite(s.E4), K));
}

TEST_CASE("scalar case set guards") {
    auto R = diag_lattice({"3/2"});
    CHECK_THROWS_AS(choose_scalar_case_sets(R, IntVec{0}, {parse_rat("3/2")}), Error);  // 0 in K
    CHECK_THROWS_AS(choose_scalar_case_sets(R, IntVec{1}, {Rat(3)}), Error);            // k in L
    CHECK_THROWS_AS(choose_scalar_case_sets(diag_lattice({"2/3"}), IntVec{1}, {parse_rat("2/3")}),
                    Error);  // gamma = 2 regime
}

TEST_CASE("multitile translation freedom") {
    auto R = diag_lattice({"2/3"});
    auto mt = build_multitile(R).translated({parse_rat("5/7")});
    check_multitile(R, mt);
}
