#include <gtest/gtest.h>

#include "seedga/reproduce.hpp"
#include "seedga/worked_example.hpp"

using namespace seedga;

namespace {

std::vector<CellCheck> of_table(const ReproductionReport& r, const std::string& table) {
    std::vector<CellCheck> cells;
    for (const auto& c : r.cells) {
        if (c.table == table) {
            cells.push_back(c);
        }
    }
    return cells;
}

} // namespace

TEST(Reproduce, EveryReproducibleCellPasses) {
    const auto report = reproduce_worked_example();
    for (const auto& c : report.cells) {
        EXPECT_TRUE(c.pass) << c.table << " " << c.cell << ": expected " << c.expected << " got "
                            << c.computed;
    }
    EXPECT_TRUE(report.passed());
}

TEST(Reproduce, TablesAndTolerances) {
    const auto report = reproduce_worked_example();
    EXPECT_EQ(of_table(report, "distance").size(), 15u);
    EXPECT_EQ(of_table(report, "tour-fitness").size(), 8u);
    EXPECT_EQ(of_table(report, "selection-value").size(), 9u);
    EXPECT_EQ(of_table(report, "selection-probability").size(), 8u);
    EXPECT_EQ(of_table(report, "cumulative-probability").size(), 8u);
    EXPECT_EQ(of_table(report, "mutated-tour-fitness").size(), 8u);
    for (const auto& c : of_table(report, "tour-fitness")) {
        EXPECT_EQ(c.tolerance, 0.0);
    }
    for (const auto& c : of_table(report, "selection-probability")) {
        EXPECT_EQ(c.tolerance, kPrintedTolerance);
    }
    const auto mutated = of_table(report, "mutated-tour-fitness");
    EXPECT_EQ(mutated[6].computed, 23);
    EXPECT_EQ(mutated[7].computed, 27);
    const auto values = of_table(report, "selection-value");
    EXPECT_EQ(values.back().cell, "total");
    EXPECT_NEAR(values.back().computed, 0.269631, 5e-7);
}

TEST(Reproduce, InconsistentCellsReportedNotChecked) {
    const auto report = reproduce_worked_example();
    ASSERT_EQ(report.not_checked.size(), 2u);
    EXPECT_NE(report.not_checked[0].find("known-inconsistent"), std::string::npos);
    EXPECT_NE(report.not_checked[0].find("[2,3,6,1,2,5,5,4]"), std::string::npos);
    EXPECT_NE(report.not_checked[0].find("[4,1,7,8,5,6,2,3]"), std::string::npos);
    EXPECT_FALSE(report.claims.all_consistent());
}

TEST(Reproduce, PassFailIsPurelyTolerance) {
    auto checks = check_initial_fitness();
    for (const auto& c : checks) {
        EXPECT_EQ(c.pass, std::abs(c.expected - c.computed) <= c.tolerance);
    }
}

TEST(ProbabilityColumns, ClosesAtOne) {
    const std::vector<double> values{1, 1, 2};
    const auto columns = probability_columns(values, 4);
    EXPECT_EQ(columns.probabilities, (std::vector<double>{0.25, 0.25, 0.5}));
    EXPECT_EQ(columns.cumulative, (std::vector<double>{0.25, 0.5, 1.0}));
}

TEST(Reproduce, JsonShape) {
    const auto j = to_json(reproduce_worked_example());
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("claims").at("enumerated_count").get<int>(), 120);
    EXPECT_EQ(j.at("claims").at("optimal_length").get<double>(), 22);
    EXPECT_FALSE(j.at("claims").at("findings").at(0).at("consistent").get<bool>());
}
