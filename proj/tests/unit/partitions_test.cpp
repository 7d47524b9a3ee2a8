#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "orthospin/errors.hpp"
#include "orthospin/partitions.hpp"

using namespace orthospin;

namespace {

// all weakly decreasing tuples of length `parts` summing to n, by brute force
std::vector<Partition> brute_partitions(int n, int parts) {
    std::vector<Partition> out;
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int i, int remaining, int max_part) -> void {
        if (i == parts) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        for (int p = 0; p <= std::min(remaining, max_part); ++p) {
            cur[i] = p;
            self(self, i + 1, remaining - p, p);
        }
    };
    rec(rec, 0, n, n);
    return out;
}

}  // namespace

TEST(Partition, RejectsIncreasingParts) {
    EXPECT_THROW(Partition({1, 2}), DomainError);
    EXPECT_THROW(Partition({2, -1}), DomainError);
}

TEST(Partition, TrimsTrailingZeros) {
    const Partition p{3, 1, 0, 0};
    EXPECT_EQ(p.length(), 2);
    EXPECT_EQ(p.size(), 4);
    EXPECT_EQ(p[5], 0);
}

TEST(Partition, TextRoundTrip) {
    const Partition p{5, 5, 3, 1};
    EXPECT_EQ(p.to_string(), "[5,5,3,1]");
    EXPECT_EQ(Partition::parse("[5,5,3,1]"), p);
    EXPECT_EQ(Partition::parse("[]"), Partition{});
    EXPECT_THROW(Partition::parse("5,5"), DomainError);
}

TEST(EnumeratePartitions, SmallCases) {
    EXPECT_EQ(enumerate_partitions(0, 3), std::vector<Partition>{Partition{}});
    EXPECT_EQ(enumerate_partitions(3, 2), (std::vector<Partition>{{3}, {2, 1}}));
    EXPECT_EQ(enumerate_partitions(8, 3).size(), 10u);
}

TEST(EnumeratePartitions, MatchesBruteForceAndIsReverseLex) {
    for (int n = 0; n <= 12; ++n)
        for (int m = 1; m <= 5; ++m) {
            const auto got = enumerate_partitions(n, m);
            auto want = brute_partitions(n, m);
            std::sort(want.begin(), want.end(), std::greater<>());
            EXPECT_EQ(got, want) << "n=" << n << " m=" << m;
        }
}

TEST(EnumerateEvenPartitions, Examples) {
    EXPECT_EQ(enumerate_even_partitions(4, 2), (std::vector<Partition>{{4}, {2, 2}}));
    EXPECT_EQ(enumerate_even_partitions(0, 5), std::vector<Partition>{Partition{}});
    EXPECT_EQ(enumerate_even_partitions(6, 3), (std::vector<Partition>{{6}, {4, 2}, {2, 2, 2}}));
    EXPECT_THROW(enumerate_even_partitions(5, 2), DomainError);
}

TEST(ContentSum, Examples) {
    EXPECT_EQ(content_sum({3}), 3);
    EXPECT_EQ(content_sum({2, 1}), 0);
    EXPECT_EQ(content_sum({10}), 45);
}

TEST(Transpose, ExamplesAndInvolution) {
    EXPECT_EQ(transpose({5, 5, 3, 1}), (Partition{4, 3, 3, 2, 2}));
    EXPECT_EQ(transpose({}), Partition{});
    EXPECT_EQ(transpose({4, 1, 1}), (Partition{3, 1, 1, 1}));
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n, n)) {
            EXPECT_EQ(transpose(transpose(p)), p);
            EXPECT_EQ(content_sum(transpose(p)), -content_sum(p));
        }
}

TEST(ColumnFlip, Examples) {
    EXPECT_EQ(column_flip({5}, 2), Partition{5});
    EXPECT_EQ(column_flip({}, 3), (Partition{1, 1, 1}));
    // first column 2 becomes 1
    EXPECT_EQ(column_flip({2, 1}, 3), Partition{2});
    EXPECT_EQ(column_flip({1, 1}, 2), Partition{});
}

TEST(ColumnFlip, InvolutionOnAdmissibleShapes) {
    for (int theta = 2; theta <= 5; ++theta)
        for (int n = 0; n <= 8; ++n)
            for (const auto& p : enumerate_partitions(n, theta)) {
                if (!fits_orthogonal(p, theta)) continue;
                const Partition f = column_flip(p, theta);
                EXPECT_TRUE(fits_orthogonal(f, theta));
                EXPECT_EQ(column_flip(f, theta), p) << p << " theta=" << theta;
                EXPECT_EQ(f.column(0) + p.column(0), theta);
            }
}

TEST(EnumerateLambdaRho, Examples) {
    EXPECT_EQ(enumerate_lambda_rho(2, 2).size(), 6u);
    const auto one = enumerate_lambda_rho(1, 4);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].lambda, Partition{1});
    EXPECT_EQ(one[0].rho, Partition{1});
    EXPECT_EQ(enumerate_lambda_rho(4, 2).size(), 12u);
}

TEST(EnumerateLambdaRho, MatchesDefinitionByBruteForce) {
    for (int theta = 2; theta <= 4; ++theta)
        for (int n = 1; n <= 8; ++n) {
            std::set<LambdaRhoPair> want;
            for (const auto& rho : brute_partitions(n, theta))
                for (int k = 0; 2 * k <= n; ++k)
                    for (const auto& lambda : brute_partitions(n - 2 * k, n - 2 * k + 1)) {
                        const Partition t = transpose(lambda);
                        if (t[0] + t[1] <= theta) want.insert({lambda, k, rho});
                    }
            const auto got = enumerate_lambda_rho(n, theta);
            EXPECT_EQ(std::set<LambdaRhoPair>(got.begin(), got.end()), want);
            EXPECT_EQ(got.size(), want.size());
            for (const auto& p : got) EXPECT_EQ(p.lambda.size() + 2 * p.k, p.rho.size());
        }
}

TEST(IsContained, Basic) {
    EXPECT_TRUE(is_contained({2, 1}, {3, 1}));
    EXPECT_FALSE(is_contained({2, 2}, {3, 1}));
    EXPECT_TRUE(is_contained({}, {1}));
}
