#include <doctest.h>

#include <algorithm>
#include <set>

#include "lpm/paths.hpp"
#include "lpm/posets.hpp"
#include "support.hpp"

using lpm::Cell;
using lpm::FencePoset;
using lpm::Integer;
using lpm::NEPath;
using lpm::Polynomial;
using lpm::Rational;
using lpm::RibbonShape;
using lpm::SkewShape;
using testsupport::poly_desc;

namespace {

RibbonShape hook21() {
    // Partition shape 21: top row of two cells over one cell.
    return RibbonShape::from_cells({{2, 1}, {1, 1}, {1, 2}});
}

RibbonShape tromino221() {
    // Skew shape 22/1.
    return RibbonShape::from_cells({{2, 1}, {2, 2}, {1, 2}});
}

NEPath path_by_word(const SkewShape& s, const std::string& word) {
    for (const NEPath& p : lpm::enumerate_ne_paths(s)) {
        if (p.step_word() == word) return p;
    }
    REQUIRE(false);
    return {};
}

}  // namespace

TEST_CASE("ribbon construction and signature") {
    CHECK(RibbonShape().signature() == "");
    CHECK(RibbonShape().cell_count() == 0);
    CHECK(RibbonShape::from_cells({{1, 1}}).signature() == "*");
    CHECK(RibbonShape::from_cells({{1, 1}, {1, 2}}).signature() == "E");
    CHECK(RibbonShape::from_cells({{3, 1}, {1, 3}}).components().size() == 2);
    CHECK(RibbonShape::from_cells({{3, 1}, {2, 2}, {1, 3}}).signature() == "*|*|*");
    CHECK(hook21().signature() == "NE");
    CHECK_THROWS_AS(RibbonShape(std::vector<std::vector<Cell>>{{}}), std::invalid_argument);
    CHECK_THROWS_AS(RibbonShape(std::vector<std::vector<Cell>>{{Cell{1, 1}, Cell{2, 1}}}),
                    std::invalid_argument);
}

TEST_CASE("plane partition counts") {
    const RibbonShape cell = RibbonShape::from_cells({{1, 1}});
    for (long t = 0; t <= 5; ++t) {
        CHECK(lpm::pp_count(cell, t) == Integer(t + 1));
    }
    // (t+1)(t+2)(2t+3)/6 for both three-cell strips
    for (long t = 0; t <= 6; ++t) {
        const Integer expected((t + 1) * (t + 2) * (2 * t + 3) / 6);
        CHECK(lpm::pp_count(hook21(), t) == expected);
        CHECK(lpm::pp_count(tromino221(), t) == expected);
    }
    // Multiplicative over components.
    const RibbonShape pair = RibbonShape::from_cells({{3, 1}, {1, 3}});
    for (long t = 0; t <= 4; ++t) {
        CHECK(lpm::pp_count(pair, t) == Integer((t + 1) * (t + 1)));
    }
    CHECK(lpm::pp_count(RibbonShape(), 3) == Integer(1));
    CHECK_THROWS_AS(lpm::pp_count(cell, -1), std::invalid_argument);
}

TEST_CASE("plane partition polynomials") {
    CHECK(lpm::pp_polynomial(RibbonShape::from_cells({{1, 1}})) == poly_desc({"1", "1"}));
    CHECK(lpm::pp_polynomial(hook21()) == poly_desc({"1/3", "3/2", "13/6", "1"}));
    CHECK(lpm::pp_polynomial(RibbonShape()) == Polynomial::constant(Rational(1)));

    for (const RibbonShape& r : {hook21(), tromino221(),
                                 RibbonShape::from_cells({{2, 1}, {1, 1}, {1, 2}, {1, 3}})}) {
        const Polynomial p = lpm::pp_polynomial(r);
        CHECK(p.degree() == r.cell_count());
        CHECK(p(Rational(-1)) == Rational(0));
        for (long t = 0; t <= r.cell_count() + 3; ++t) {
            CHECK(p(Rational(t)) == Rational(lpm::pp_count(r, t)));
        }
    }
}

TEST_CASE("plane-partition polynomials multiply over components") {
    const RibbonShape mixed =
        RibbonShape::from_cells({{4, 1}, {3, 1}, {3, 2}, {1, 4}, {1, 5}});
    REQUIRE(mixed.components().size() == 2);
    Polynomial product = Polynomial::constant(Rational(1));
    for (const auto& comp : mixed.components()) {
        product = product * lpm::pp_polynomial(RibbonShape({comp}));
    }
    CHECK(lpm::pp_polynomial(mixed) == product);
}

TEST_CASE("order polynomials") {
    CHECK(lpm::order_polynomial(RibbonShape()) == Polynomial::constant(Rational(1)));
    CHECK(lpm::order_polynomial(hook21()) == poly_desc({"1/3", "1/2", "1/6", "0"}));

    // Hook 31: the expansion printed for the strips of the running example.
    const RibbonShape hook31 = RibbonShape::from_cells({{2, 1}, {1, 1}, {1, 2}, {1, 3}});
    CHECK(lpm::order_polynomial(hook31) == poly_desc({"1/8", "5/12", "3/8", "1/12", "0"}));

    // gamma_min of 433/1 at argument t+1 equals its plane-partition polynomial.
    const SkewShape s = SkewShape::parse("433/1");
    const RibbonShape gmin = lpm::ribbon_of(lpm::gamma_min(s));
    CHECK(lpm::order_polynomial(gmin).shifted(Rational(1)) == lpm::pp_polynomial(gmin));
    CHECK(lpm::pp_polynomial(gmin) ==
          poly_desc({"13/360", "49/120", "67/36", "35/8", "2017/360", "223/60", "1"}));
}

TEST_CASE("ideal generation") {
    const SkewShape s = SkewShape::parse("433/1");
    const NEPath nenee = path_by_word(s, "NENEE");
    const RibbonShape ribbon = lpm::ribbon_of(nenee);
    const FencePoset fence(ribbon);

    CHECK(fence.ideal_generated_by({}).empty());

    // Both high peaks of NENEE generate everything: one filter, one strip.
    const auto hp = lpm::high_peaks(nenee, s);
    REQUIRE(hp.size() == 2);
    CHECK(fence.ideal_generated_by(hp).size() == 6);

    // A single maximal element pulls in exactly its lower set.
    const NEPath neene = path_by_word(s, "NEENE");
    const FencePoset f2(lpm::ribbon_of(neene));
    const auto closure = f2.ideal_generated_by({Cell{2, 1}});
    std::vector<Cell> brute;
    for (const Cell c : f2.elements()) {
        if (f2.leq(c, Cell{2, 1})) brute.push_back(c);
    }
    std::sort(brute.begin(), brute.end());
    CHECK(closure == brute);
    CHECK_THROWS_AS(fence.ideal_generated_by({Cell{9, 9}}), std::invalid_argument);
}

TEST_CASE("filter enumeration") {
    const SkewShape s = SkewShape::parse("433/1");

    // Chain of two cells: three filters.
    const RibbonShape chain = RibbonShape::from_cells({{2, 1}, {1, 1}});
    CHECK(lpm::enumerate_filters(FencePoset(chain), chain.cells()).size() == 3);

    // Nothing allowed: only the empty filter.
    CHECK(lpm::enumerate_filters(FencePoset(chain), {}).size() == 1);

    const std::map<std::string, std::size_t> expected = {
        {"EENNE", 1}, {"ENENE", 6}, {"NEENE", 3}, {"ENNEE", 2}, {"NENEE", 1}};
    for (const NEPath& gamma : lpm::enumerate_ne_paths(s)) {
        if (gamma == lpm::gamma_min(s)) continue;  // contributes its single shifted term
        const RibbonShape ribbon = lpm::ribbon_of(gamma);
        const FencePoset fence(ribbon);
        const auto ideal = fence.ideal_generated_by(lpm::high_peaks(gamma, s));
        std::vector<Cell> allowed;
        for (const Cell c : fence.elements()) {
            if (!std::binary_search(ideal.begin(), ideal.end(), c)) allowed.push_back(c);
        }
        CHECK(lpm::enumerate_filters(fence, allowed).size() ==
              expected.at(gamma.step_word()));
    }
}

TEST_CASE("filters of the induced subposet match filters inside an allowed ideal complement") {
    const SkewShape s = SkewShape::parse("433/1");
    for (const NEPath& gamma : lpm::enumerate_ne_paths(s)) {
        const RibbonShape ribbon = lpm::ribbon_of(gamma);
        const FencePoset fence(ribbon);
        const auto ideal = fence.ideal_generated_by(lpm::high_peaks(gamma, s));
        std::vector<Cell> allowed;
        for (const Cell c : fence.elements()) {
            if (!std::binary_search(ideal.begin(), ideal.end(), c)) allowed.push_back(c);
        }
        std::sort(allowed.begin(), allowed.end());
        std::set<std::vector<Cell>> within_allowed;
        for (const auto& f : lpm::enumerate_filters(fence, fence.elements())) {
            if (std::includes(allowed.begin(), allowed.end(), f.begin(), f.end())) {
                within_allowed.insert(f);
            }
        }
        std::set<std::vector<Cell>> induced;
        for (const auto& f : lpm::enumerate_filters(fence, allowed)) {
            induced.insert(f);
        }
        CHECK(induced == within_allowed);
    }
}

TEST_CASE("remove_filter") {
    const SkewShape s = SkewShape::parse("433/1");
    const NEPath neene = path_by_word(s, "NEENE");
    const RibbonShape ribbon = lpm::ribbon_of(neene);
    const FencePoset fence(ribbon);

    CHECK(lpm::remove_filter(ribbon, {}) == ribbon);
    CHECK_THROWS_AS(lpm::remove_filter(ribbon, {Cell{3, 1}}), std::invalid_argument);

    const auto ideal = fence.ideal_generated_by(lpm::high_peaks(neene, s));
    std::vector<Cell> allowed;
    for (const Cell c : fence.elements()) {
        if (!std::binary_search(ideal.begin(), ideal.end(), c)) allowed.push_back(c);
    }
    const auto filters = lpm::enumerate_filters(fence, allowed);
    REQUIRE(filters.size() == 3);

    // The three strips of the running example: the path itself, the
    // disconnected single-cell + hook strip, and the bare hook.
    Polynomial sum;
    std::multiset<std::string> signatures;
    for (const auto& f : filters) {
        const RibbonShape strip = lpm::remove_filter(ribbon, f);
        signatures.insert(strip.signature());
        sum += lpm::order_polynomial(strip);
    }
    CHECK(signatures == std::multiset<std::string>{"NEENE", "*|NEE", "NEE"});
    CHECK(sum == poly_desc({"1/18", "43/120", "8/9", "25/24", "5/9", "1/10", "0"}));

    // Removing everything leaves the empty ribbon.
    const RibbonShape chain = RibbonShape::from_cells({{2, 1}, {1, 1}});
    CHECK(lpm::remove_filter(chain, chain.cells()).empty());

    // In a single row the filters are the left prefixes; removal keeps the
    // remaining run of the row.
    const RibbonShape row = RibbonShape::from_cells({{1, 1}, {1, 2}, {1, 3}});
    CHECK(lpm::remove_filter(row, {Cell{1, 1}}) ==
          RibbonShape::from_cells({{1, 2}, {1, 3}}));
    CHECK_THROWS_AS(lpm::remove_filter(row, {Cell{1, 3}}), std::invalid_argument);
}

TEST_CASE("the three strips of the running example, individually") {
    // Omega values printed in the source: the full path, the single cell
    // times the hook, and the hook alone.
    const SkewShape s = SkewShape::parse("433/1");
    const RibbonShape full = lpm::ribbon_of(path_by_word(s, "NEENE"));
    CHECK(lpm::order_polynomial(full) ==
          poly_desc({"1/18", "7/30", "25/72", "1/4", "7/72", "1/60", "0"}));

    const RibbonShape middle = lpm::remove_filter(full, {Cell{1, 3}});
    CHECK(middle.components().size() == 2);
    CHECK(lpm::order_polynomial(middle) == poly_desc({"1/8", "5/12", "3/8", "1/12", "0", "0"}));

    const RibbonShape hook = lpm::remove_filter(full, {Cell{1, 3}, Cell{1, 4}});
    CHECK(lpm::order_polynomial(hook) == poly_desc({"1/8", "5/12", "3/8", "1/12", "0"}));
}

TEST_CASE("grouping identity: filters over the whole fence") {
    const SkewShape s = SkewShape::parse("433/1");
    for (const NEPath& gamma : lpm::enumerate_ne_paths(s)) {
        const RibbonShape ribbon = lpm::ribbon_of(gamma);
        const FencePoset fence(ribbon);
        Polynomial sum;
        for (const auto& f : lpm::enumerate_filters(fence, fence.elements())) {
            sum += lpm::order_polynomial(lpm::remove_filter(ribbon, f));
        }
        CHECK(sum == lpm::order_polynomial(ribbon).shifted(Rational(1)));
    }
}

TEST_CASE("transfer DP agrees with the column-profile oracle") {
    const SkewShape s = SkewShape::parse("433/1");
    for (const auto& d : lpm::enumerate_delannoy(s)) {
        const RibbonShape r = lpm::ribbon_of(d);
        for (long t = 0; t <= 6; ++t) {
            CHECK(lpm::pp_count(r, t) == testsupport::pp_count_column_oracle(r, t));
        }
    }
}

TEST_CASE("order polynomials of strips have nonnegative coefficients") {
    const SkewShape s = SkewShape::parse("55533/431");
    for (const auto& d : lpm::enumerate_delannoy(s)) {
        const Polynomial omega = lpm::order_polynomial(lpm::ribbon_of(d));
        for (const Rational& c : omega.coefficients()) {
            CHECK(c.sign() >= 0);
        }
    }
}
