#include <gtest/gtest.h>

#include "qreflect/errors.hpp"
#include "qreflect/qubits.hpp"

using qreflect::QubitSet;

TEST(QubitSet, ParsesLettersAndNumbers) {
    EXPECT_EQ(QubitSet::parse("A"), (QubitSet{0}));
    EXPECT_EQ(QubitSet::parse("ac"), (QubitSet{0, 2}));
    EXPECT_EQ(QubitSet::parse("1,3"), (QubitSet{0, 2}));
    EXPECT_TRUE(QubitSet::parse("").empty());
    EXPECT_THROW(QubitSet::parse("A1"), qreflect::ArgumentError);
    EXPECT_THROW(QubitSet::parse("0"), qreflect::ArgumentError);
    EXPECT_THROW(QubitSet::parse("A-B"), qreflect::ArgumentError);
}

TEST(QubitSet, ComplementAndFit) {
    const QubitSet s{1};
    EXPECT_EQ(s.complement(3), (QubitSet{0, 2}));
    EXPECT_TRUE(s.fits(2));
    EXPECT_FALSE((QubitSet{2}).fits(2));
    EXPECT_EQ(QubitSet::all(3).label(), "ABC");
    EXPECT_EQ(QubitSet::all(3).size(), 3);
}
