#include "corpus.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

#include <cctype>
#include <map>

using namespace hydro::testing;

class PropertySuite : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PropertySuite, Holds) {
    const Property& p = property_suite()[GetParam()];
    for (std::uint64_t seed : {kPropertySeed, kPropertySeed + 1}) {
        PropertyResult r = p.run(seed);
        EXPECT_TRUE(r.ok) << p.name << ": " << r.detail;
        EXPECT_GT(r.cases, 0) << p.name;
    }
}

INSTANTIATE_TEST_SUITE_P(All, PropertySuite, ::testing::Range<std::size_t>(0, property_suite().size()),
                         [](const auto& info) {
                             std::string s;
                             for (char c : property_suite()[info.param].name)
                                 s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                             return s;
                         });

TEST(Corpus, RandomPairsAreSeeded) {
    auto a = random_pairs(2, 10, 3), b = random_pairs(2, 10, 3);
    ASSERT_EQ(a.size(), 10u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].name, b[i].name);
        EXPECT_EQ(a[i].h, b[i].h);
    }
}

TEST(Corpus, NegativeControlsCoverEachCondition) {
    std::map<std::string, int> count;
    for (const auto& c : negative_controls())
        ++count[c.condition];
    EXPECT_EQ(count, (std::map<std::string, int>{{"killing", 3}, {"linearity", 3}, {"nijenhuis", 3}}));
}
