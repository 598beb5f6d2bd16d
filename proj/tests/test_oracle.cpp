#include <doctest.h>

#include <stdexcept>

#include "heffter/base_arrays.hpp"
#include "heffter/dispatch.hpp"
#include "heffter/oracle.hpp"

using namespace heffter;

TEST_SUITE("oracle") {
    TEST_CASE("3x3 modular search finds solutions; the printed example passes the same checks") {
        const auto found = brute_force_search(3, 3, HeffterClass::modular, 1);
        REQUIRE(found.size() == 1);
        CHECK(verify(found.front()).is_modular_heffter);
        CHECK(verify(base::h3x3()).is_modular_heffter);
    }

    TEST_CASE("3x3 integer search is empty") {
        CHECK(brute_force_search(3, 3, HeffterClass::integer, 1).empty());
    }

    TEST_CASE("3x4 integer search succeeds; the printed example is one witness") {
        const auto found = brute_force_search(3, 4, HeffterClass::integer, 1);
        REQUIRE(!found.empty());
        CHECK(verify(found.front()).is_integer_heffter);
        CHECK(verify(base::h3x4()).is_integer_heffter);
    }

    TEST_CASE("search is deterministic and respects the limit") {
        const auto a = brute_force_search(3, 3, HeffterClass::modular, 3);
        const auto b = brute_force_search(3, 3, HeffterClass::modular, 3);
        CHECK(a.size() == 3);
        REQUIRE(b.size() == 3);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
        // symmetry breaking: top-left positive and minimal in row 0
        for (const HeffterCandidate& c : a) {
            CHECK(c.grid().at(0, 0) > 0);
            CHECK(c.grid().at(0, 0) < std::abs(c.grid().at(0, 1)));
            CHECK(c.grid().at(0, 0) < std::abs(c.grid().at(0, 2)));
        }
    }

    TEST_CASE("every constructed array at tiny sizes passes the oracle's own checks") {
        for (auto [m, n] : {std::pair<Entry, Entry>{3, 3}, {3, 4}, {4, 3}}) {
            const VerificationReport rep = verify(construct(m, n).array);
            CHECK(rep.is_modular_heffter);
        }
    }

    TEST_CASE("2xn search returns nothing (dimension necessity)") {
        CHECK(brute_force_search(2, 4, HeffterClass::modular, 1).empty());
    }

    TEST_CASE("size cap enforced") {
        CHECK_THROWS_AS(brute_force_search(4, 4, HeffterClass::modular, 1), std::invalid_argument);
    }
}
