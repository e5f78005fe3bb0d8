#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "breakloops/family.hpp"
#include "breakloops/pedigree.hpp"
#include "breakloops/pedigree_io.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace breakloops;
using namespace breakloops::testing;
using Kind = PedigreeError::Kind;

namespace {

Kind error_kind(const std::string& csv) {
    try {
        parse_pedigree(csv);
    } catch (const PedigreeError& e) {
        return e.kind();
    }
    FAIL("expected a PedigreeError");
    return Kind::invalid_argument;
}

}  // namespace

TEST_CASE("parse: minimal nuclear family") {
    const auto p = ped(kNuclear);
    CHECK(p.size() == 3);
    REQUIRE(p.matings().size() == 1);
    CHECK(p.matings()[0].father_id == 1);
    CHECK(p.matings()[0].mother_id == 2);
    CHECK(p.matings()[0].child_ids == std::vector<PersonId>{3});
    CHECK(p.at(3).is_proband);
}

TEST_CASE("parse: two-loop pedigree counts") {
    const auto p = ped(kTwoLoops);
    CHECK(p.size() == 9);
    CHECK(p.matings().size() == 4);
    CHECK(p.offspring_count() == 6);
}

TEST_CASE("parse: dangling parent names row and id") {
    const std::string csv = "ID,MotherID,FatherID,Sex,isProband\n1,,,1,1\n2,5,1,0,0\n";
    try {
        parse_pedigree(csv);
        FAIL("no error");
    } catch (const PedigreeError& e) {
        CHECK(e.kind() == Kind::missing_reference);
        CHECK(e.row() == 2);
        const std::string what = e.what();
        CHECK(what.find("row 2") != std::string::npos);
        CHECK(what.find('5') != std::string::npos);
    }
}

TEST_CASE("parse: validation errors") {
    const std::string h = "ID,MotherID,FatherID,Sex,isProband\n";
    CHECK(error_kind(h + "1,,,1,1\n1,,,0,0\n") == Kind::duplicate_id);
    CHECK(error_kind(h + "x,,,1,1\n") == Kind::invalid_id);
    CHECK(error_kind(h + "-3,,,1,1\n") == Kind::invalid_id);
    CHECK(error_kind(h + "1,,,U,1\n") == Kind::unknown_sex);
    CHECK(error_kind(h + "1,,,1,maybe\n") == Kind::unknown_token);
    CHECK(error_kind(h + "1,,1,1,1\n") == Kind::self_parent);
    CHECK(error_kind(h + "1,,,1,1\n2,,,0,0\n3,1,2,1,0\n") == Kind::parent_sex_mismatch);
    CHECK(error_kind(h + "1,2,,0,1\n2,1,,0,0\n") == Kind::own_ancestor);
    CHECK(error_kind(h + "1,,,1\n") == Kind::malformed_table);
    CHECK(error_kind("ID,MotherID,Sex,isProband\n1,,1,1\n") == Kind::malformed_table);
    CHECK(error_kind("") == Kind::malformed_table);
    CHECK(error_kind(h + "1,,,1,1,carrier\n") == Kind::malformed_table);
    CHECK(error_kind("ID,MotherID,FatherID,Sex,isProband,BRCA1\n1,,,1,1,positive\n") == Kind::unknown_token);
}

TEST_CASE("parse: accepted tokens, delimiters and BOM") {
    const std::string tsv =
        "\xEF\xBB\xBFid\tmotherid\tfatherid\tsex\tisproband\tBRCA1\tBRCA2\n"
        "1\tNA\t0\tmale\tno\tcarrier\tNA\n"
        "2\t\t\tF\tfalse\tnon_carrier\t\n"
        "\n"
        "3\t2\t1\tM\tTRUE\t1\t0\n";
    const auto p = parse_pedigree(tsv);
    CHECK(p.size() == 3);
    CHECK(p.variant_names() == std::vector<std::string>{"BRCA1", "BRCA2"});
    CHECK(p.at(1).sex == Sex::male);
    CHECK(p.at(1).is_founder());
    CHECK(p.at(1).result_for("BRCA1") == TestResult::carrier);
    CHECK(p.at(1).result_for("BRCA2") == TestResult::untested);
    CHECK(p.at(2).result_for("BRCA1") == TestResult::non_carrier);
    CHECK(p.at(3).is_proband);

    ParseOptions semi;
    semi.delimiter = ';';
    const auto q = parse_pedigree("ID;MotherID;FatherID;Sex;isProband\n1;;;1;1\n", semi);
    CHECK(q.size() == 1);
}

TEST_CASE("parse: variant column selection") {
    const std::string csv = "ID,MotherID,FatherID,Sex,isProband,A,B\n1,,,1,1,1,0\n";
    ParseOptions only_b;
    only_b.variants = std::vector<std::string>{"B"};
    const auto p = parse_pedigree(csv, only_b);
    CHECK(p.variant_names() == std::vector<std::string>{"B"});
    CHECK(p.at(1).test_results.size() == 1);

    ParseOptions missing;
    missing.variants = std::vector<std::string>{"C"};
    CHECK_THROWS_AS(parse_pedigree(csv, missing), PedigreeError);
}

TEST_CASE("serialize/parse round trip") {
    for (const auto& name : {"tested_breaker_no_mm", "three_loops", "missing_parents"}) {
        const auto p = load_fixture(name);
        CHECK(parse_pedigree(serialize_pedigree(p)) == p);
        CHECK(parse_pedigree(serialize_pedigree(p, '\t')) == p);
    }
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        oracle::GeneratorParams params;
        params.loops = seed % 3;
        params.variant_count = 3;
        params.tested_fraction = 0.5;
        params.multiple_matings = seed % 2 == 0;
        params.seed = seed;
        const auto p = oracle::random_pedigree(params);
        const auto broken = run_pipeline(p);
        CHECK(parse_pedigree(serialize_pedigree(broken)) == broken);
    }
}

TEST_CASE("derive_matings") {
    const auto m = derive_matings(ped(kTwoLoops));
    REQUIRE(m.size() == 4);
    const std::vector<std::pair<PersonId, PersonId>> expected{{1, 2}, {3, 4}, {5, 4}, {8, 7}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(m[i].mating_id == static_cast<MatingId>(i + 1));
        CHECK(m[i].father_id == expected[i].first);
        CHECK(m[i].mother_id == expected[i].second);
    }
    CHECK(m[1].child_ids == std::vector<PersonId>{6, 7});

    CHECK(derive_matings(ped(kNuclear)).size() == 1);
    CHECK(derive_matings(ped("ID,MotherID,FatherID,Sex,isProband\n1,,,1,1\n2,,,0,0\n")).empty());
}

TEST_CASE("mating ids do not depend on row order") {
    auto rows = ped(kTwoLoops).individuals();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(rows.begin(), rows.end(), rng);
        const Pedigree p(rows, {});
        CHECK(p.matings() == ped(kTwoLoops).matings());
        CHECK(canonical_order(p) == ped(kTwoLoops));
    }
}

TEST_CASE("fix_parents") {
    SUBCASE("single missing father gets a male placeholder") {
        const auto p = ped("ID,MotherID,FatherID,Sex,isProband\n2,,,0,0\n3,2,,1,1\n");
        const auto f = fix_parents(p);
        REQUIRE(f.size() == 3);
        const auto& placeholder = f.individuals().back();
        CHECK(placeholder.id == 4);
        CHECK(placeholder.sex == Sex::male);
        CHECK(placeholder.is_placeholder);
        CHECK(placeholder.is_founder());
        CHECK(f.at(3).father_id == 4);
    }
    SUBCASE("complete pedigree unchanged") {
        const auto p = ped(kTwoLoops);
        CHECK(fix_parents(p) == p);
    }
    SUBCASE("siblings share one placeholder, mating count +1") {
        const auto p = ped("ID,MotherID,FatherID,Sex,isProband\n2,,,0,0\n3,2,,1,1\n4,2,,0,0\n");
        const auto f = fix_parents(p);
        CHECK(f.matings().size() == p.matings().size() + 1);
        CHECK(f.size() == 4);
        CHECK(f.at(3).father_id == f.at(4).father_id);
    }
    SUBCASE("missing mother is female") {
        const auto p = ped("ID,MotherID,FatherID,Sex,isProband\n1,,,1,0\n3,,1,1,1\n");
        const auto f = fix_parents(p);
        CHECK(f.at(*f.at(3).mother_id).sex == Sex::female);
    }
}

TEST_CASE("partition_families") {
    CHECK(partition_families(ped(kTwoLoops)).size() == 1);
    CHECK(partition_families(ped(kTwoLoops))[0].size() == 9);

    const auto two = ped(
        "ID,MotherID,FatherID,Sex,isProband\n1,,,1,0\n2,,,0,0\n3,2,1,1,1\n11,,,1,0\n12,,,0,0\n13,12,11,1,0\n");
    const auto parts = partition_families(two);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 3);
    CHECK(parts[1].size() == 3);
    CHECK(parts[0].at(1).id == 1);

    const auto lone = ped("ID,MotherID,FatherID,Sex,isProband\n1,,,1,0\n2,,,0,0\n3,2,1,1,1\n4,,,0,0\n");
    CHECK(partition_families(lone).size() == 2);
}

TEST_CASE("prune_unconnected") {
    const auto with = ped(kNuclear);
    const auto without = ped("ID,MotherID,FatherID,Sex,isProband\n11,,,1,0\n12,,,0,0\n13,12,11,1,0\n");
    const auto r = prune_unconnected({with, without});
    REQUIRE(r.families.size() == 1);
    CHECK(r.families[0] == with);
    CHECK(r.dropped_ids == std::vector<PersonId>{11, 12, 13});

    const auto same = prune_unconnected({with});
    CHECK(same.families.size() == 1);
    CHECK(same.dropped_ids.empty());

    try {
        prune_unconnected({without});
        FAIL("no error");
    } catch (const PedigreeError& e) {
        CHECK(e.kind() == Kind::no_proband);
    }
}

TEST_CASE("genotype_count") {
    const std::vector<std::string> v3{"A", "B", "C"};
    Individual ind;
    CHECK(genotype_count(ind, v3) == 8);
    ind.test_results = {{"A", TestResult::carrier}};
    CHECK(genotype_count(ind, v3) == 4);
    ind.test_results = {{"A", TestResult::carrier}, {"B", TestResult::non_carrier}, {"C", TestResult::carrier}};
    CHECK(genotype_count(ind, v3) == 1);
    CHECK_THROWS_AS(genotype_count(ind, {}), PedigreeError);
}

TEST_CASE("GenotypeWeights") {
    const auto p = load_fixture("tested_breaker_no_mm");
    const auto w = GenotypeWeights::from_pedigree(p);
    CHECK(w.count(8) == 2.0);
    CHECK(w.count(12) == 8.0);
    CHECK(w.log_count(8) == doctest::Approx(std::log(2.0)));

    const auto plain = GenotypeWeights::from_pedigree(ped(kTwoLoops));
    CHECK(plain.count(4) == 2.0);

    const auto u = GenotypeWeights::for_pedigree(p, 3.0);
    CHECK(u.count(8) == 3.0);
    CHECK(u.powered(2).count(8) == doctest::Approx(9.0));

    auto s = w;
    s.set(8, 1.0);
    CHECK(s.log_count(8) == 0.0);
    CHECK_THROWS(s.set(8, 0.5));
    CHECK_THROWS(w.count(999));
}

TEST_CASE("Pedigree lookups") {
    const auto p = ped(kTwoLoops);
    CHECK(p.max_id() == 9);
    CHECK(p.contains(4));
    CHECK_FALSE(p.contains(10));
    CHECK(p.find(10) == nullptr);
    CHECK_THROWS(p.at(10));
    CHECK(p.mating(2).child_ids == std::vector<PersonId>{6, 7});
    CHECK(p.find_mating(5) == nullptr);
    CHECK(p.has_proband());
}
