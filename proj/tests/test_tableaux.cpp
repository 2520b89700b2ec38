#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "kostka/tableaux.hpp"
#include "oracles.hpp"
#include "worked_examples.hpp"

using namespace kostka;

namespace {

Tableau from_rows(const oracle::Rows& rows) { return Tableau(rows); }

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(Tableau{}));
  CHECK(validate(Tableau{{1, 1, 2, 2}, {3}}));
  CHECK(validate(golden::ex43::F));
  CHECK_FALSE(validate(Tableau{{2, 1}}));            // row decreases
  CHECK_FALSE(validate(Tableau{{1, 2}, {1}}));       // column not strict
  CHECK_FALSE(validate(Tableau{{1}, {1, 2}}));       // row lengths grow
  CHECK_FALSE(validate(Tableau{{1, 0}}));            // nonpositive entry
  CHECK_FALSE(validate(Tableau{{1}, {}}));           // empty row
}

TEST_CASE("shape and cell_count") {
  CHECK(Tableau{{1, 1, 2, 2}, {3}}.shape() == Partition{4, 1});
  CHECK(Tableau{}.shape() == Partition{});
  CHECK(Tableau{{1, 1, 2, 2}, {3}}.cell_count() == 5);
  CHECK_THROWS_AS((Tableau{{1}, {1, 2}}.shape()), std::invalid_argument);
}

TEST_CASE("content reports exact counts, zeros kept") {
  CHECK(content(Tableau{{1, 1, 2, 2}, {3}}, 3) == Composition{2, 2, 1});
  CHECK(content(Tableau{{1, 1, 1, 2}, {2}}, 3) == Composition{3, 2, 0});
  CHECK(content(Tableau{}, 2) == Composition{0, 0});
  CHECK_THROWS_AS(content(Tableau{{1, 4}}, 3), std::invalid_argument);
}

TEST_CASE("enumerate_ssyt: golden lists in canonical order") {
  CHECK(enumerate_ssyt(Partition{4, 1}, Composition{2, 2, 1}) ==
        std::vector<Tableau>{golden::ex41::L, golden::ex41::M});
  CHECK(enumerate_ssyt(Partition{4, 3}, Composition{3, 2, 2}) ==
        std::vector<Tableau>{golden::ex43::P, golden::ex43::N});
  CHECK(enumerate_ssyt(Partition{3}, Composition{3}) ==
        std::vector<Tableau>{Tableau{{1, 1, 1}}});
  CHECK(enumerate_ssyt(Partition{}, Composition{}) == std::vector<Tableau>{Tableau{}});
  CHECK(enumerate_ssyt(Partition{}, Composition{0, 0}) == std::vector<Tableau>{Tableau{}});
  CHECK(enumerate_ssyt(Partition{2, 1}, Composition{4}).empty());     // weight mismatch
  CHECK(enumerate_ssyt(Partition{1, 1, 1}, Composition{3}).empty());  // no tableau exists
}

TEST_CASE("enumerate_ssyt_bounded: golden counts") {
  CHECK(enumerate_ssyt_bounded(Partition{2, 1}, 3).size() == 8);
  CHECK(enumerate_ssyt_bounded(Partition{2}, 2) ==
        std::vector<Tableau>{Tableau{{1, 1}}, Tableau{{1, 2}}, Tableau{{2, 2}}});
  CHECK(enumerate_ssyt_bounded(Partition{1, 1}, 2) ==
        std::vector<Tableau>{Tableau{{1}, {2}}});
  CHECK(enumerate_ssyt_bounded(Partition{4, 1}, 3).size() == 24);
  CHECK(enumerate_ssyt_bounded(Partition{}, 1) == std::vector<Tableau>{Tableau{}});
  CHECK_THROWS_AS(enumerate_ssyt_bounded(Partition{1}, 0), std::invalid_argument);
}

TEST_CASE("kostka: golden values") {
  CHECK(kostka::kostka(Partition{4, 1}, Composition{2, 2, 1}) == 2);
  CHECK(kostka::kostka(Partition{4, 1}, Composition{3, 1, 1}) == 2);
  CHECK(kostka::kostka(Partition{4, 1}, Composition{3, 2}) == 1);
  CHECK(kostka::kostka(Partition{2, 1}, Composition{1, 1, 1}) == 2);
  CHECK(kostka::kostka(Partition{1, 1, 1}, Composition{3}) == 0);
  CHECK(kostka::kostka(Partition{}, Composition{}) == 1);
  CHECK_THROWS_AS(kostka::kostka(Partition{2, 1}, Composition{4}), std::invalid_argument);
}

TEST_CASE("kostka_oracle: golden values") {
  CHECK(kostka_oracle(Partition{4, 1}, Composition{2, 2, 1}) == 2);
  CHECK(kostka_oracle(Partition{3, 3}, Composition{2, 2, 2}) == 1);
  CHECK(kostka_oracle(Partition{5}, Composition{5}) == 1);
  CHECK(kostka_oracle(Partition{}, Composition{}) == 1);
  CHECK(kostka_oracle(Partition{1, 1, 1}, Composition{3}) == 0);
  CHECK_THROWS_AS(kostka_oracle(Partition{2, 1}, Composition{4}), std::invalid_argument);
}

TEST_CASE("enumeration, kostka, kostka_oracle and brute force agree (n <= 5)") {
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& shape : partitions_of(n)) {
      for (const auto& c : oracle::compositions(n, n)) {
        const Composition w(c);
        auto listed = enumerate_ssyt(shape, w);
        CHECK(listed.size() == kostka::kostka(shape, w));
        CHECK(kostka::kostka(shape, w) == kostka_oracle(shape, w));
        CHECK(kostka::kostka(shape, w) == oracle::kostka_count(shape.parts(), c));
        CHECK(std::is_sorted(listed.begin(), listed.end()));
        for (const Tableau& t : listed) {
          CHECK(validate(t));
          CHECK(t.shape() == shape);
          CHECK(content(t, w.length()) == w);
        }
      }
    }
  }
}

TEST_CASE("bounded enumeration matches brute force (n <= 5, h <= 3)") {
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& shape : partitions_of(n)) {
      for (int h = 1; h <= 3; ++h) {
        auto listed = enumerate_ssyt_bounded(shape, h);
        std::vector<Tableau> expected;
        for (const auto& rows : oracle::ssyt_bounded(shape.parts(), h)) {
          expected.push_back(from_rows(rows));
        }
        std::sort(expected.begin(), expected.end());
        CHECK(std::is_sorted(listed.begin(), listed.end()));
        CHECK(listed == expected);
      }
    }
  }
}

TEST_CASE("bounded enumeration is the disjoint union over contents") {
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& shape : partitions_of(n)) {
      for (int h = 1; h <= 3; ++h) {
        std::size_t by_content = 0;
        for (const auto& c : oracle::compositions(n, h)) {
          by_content += enumerate_ssyt(shape, Composition(c)).size();
        }
        CHECK(by_content == enumerate_ssyt_bounded(shape, h).size());
      }
    }
  }
}

TEST_CASE("kostka is invariant under permutations of the content (n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& shape : partitions_of(n)) {
      for (const Partition& lambda : partitions_of(n)) {
        const std::uint64_t base = kostka::kostka(shape, lambda);
        std::vector<int> perm = lambda.parts();
        std::sort(perm.begin(), perm.end());
        do {
          CHECK(kostka::kostka(shape, Composition(perm)) == base);
        } while (std::next_permutation(perm.begin(), perm.end()));
        // Zero parts do not change the count either.
        std::vector<int> padded = lambda.parts();
        padded.insert(padded.begin(), 0);
        padded.push_back(0);
        CHECK(kostka::kostka(shape, Composition(padded)) == base);
      }
    }
  }
}

TEST_CASE("to_ascii renders one row per line") {
  CHECK(to_ascii(Tableau{{1, 1, 2, 2}, {3}}) == "1 1 2 2\n3");
  CHECK(to_ascii(Tableau{{10, 11}}) == "10 11");
  CHECK(to_ascii(Tableau{}) == "");
}
