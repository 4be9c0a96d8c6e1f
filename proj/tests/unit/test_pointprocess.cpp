#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "secgraph/error.hpp"
#include "secgraph/point_process.hpp"
#include "secgraph/stats.hpp"

using namespace secgraph;

namespace {

double mean_count(double intensity, double side, int seeds) {
  double sum = 0.0;
  for (int s = 0; s < seeds; ++s)
    sum += static_cast<double>(sample_ppp(intensity, Window::plain(side), {99, static_cast<std::uint64_t>(s)}).size());
  return sum / seeds;
}

std::vector<double> exhaustive_nearest(const PointSet& goods, const PointSet& eaves, const Window& w) {
  std::vector<double> out;
  for (const auto& g : goods.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : eaves.points) best = std::min(best, w.distance(g, e));
    out.push_back(best);
  }
  return out;
}

}  // namespace

TEST(SamplePpp, ZeroIntensityIsEmpty) {
  EXPECT_TRUE(sample_ppp(0.0, Window::plain(10.0), {1, 0}).empty());
}

TEST(SamplePpp, NegativeIntensityRejected) {
  EXPECT_THROW(sample_ppp(-1.0, Window::plain(10.0), {1, 0}), ParameterError);
}

TEST(SamplePpp, MeanCountUnitIntensity) {
  // Poisson(100): the mean of 2000 counts has standard error sqrt(100/2000).
  const double m = mean_count(1.0, 10.0, 2000);
  EXPECT_LT(std::abs(m - 100.0), 4.0 * std::sqrt(100.0 / 2000.0));
}

TEST(SamplePpp, MeanCountFifthIntensity) {
  const double m = mean_count(0.2, 50.0, 1000);
  EXPECT_LT(std::abs(m - 500.0), 4.0 * std::sqrt(500.0 / 1000.0));
}

TEST(SamplePpp, PointsInsideWindowAndSorted) {
  for (const auto& w : {Window::plain(20.0), Window::inflated(20.0, 3.0), Window::torus(20.0)}) {
    const auto ps = sample_ppp(1.0, w, {5, 2});
    EXPECT_TRUE(std::is_sorted(ps.points.begin(), ps.points.end()));
    for (const auto& p : ps.points) EXPECT_TRUE(w.contains(p));
  }
  const auto infl = sample_ppp(1.0, Window::inflated(20.0, 3.0), {5, 2});
  EXPECT_TRUE(std::any_of(infl.points.begin(), infl.points.end(), [](Point p) { return p.x < 0.0; }));
}

TEST(SamplePpp, Deterministic) {
  const auto a = sample_ppp(1.0, Window::plain(30.0), {7, 3});
  const auto b = sample_ppp(1.0, Window::plain(30.0), {7, 3});
  EXPECT_EQ(a.points, b.points);
  const auto c = sample_ppp(1.0, Window::plain(30.0), {7, 4});
  EXPECT_NE(a.points, c.points);
  const auto d = sample_ppp(1.0, Window::plain(30.0), {7, 3}, Stream::eaves);
  EXPECT_NE(a.points, d.points);
}

TEST(AddCenterNode, EmptySetGetsCenter) {
  PointSet ps = sample_ppp(0.0, Window::plain(10.0), {1, 0});
  const auto out = add_center_node(ps);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.points[0], (Point{5.0, 5.0}));
  ASSERT_TRUE(out.origin.has_value());
  EXPECT_EQ(*out.origin, 0u);
}

TEST(AddCenterNode, CountGrowsByOneAndOrderKept) {
  const auto ps = sample_ppp(1.0, Window::plain(10.0), {3, 1});
  const auto out = add_center_node(ps);
  EXPECT_EQ(out.size(), ps.size() + 1);
  EXPECT_TRUE(std::is_sorted(out.points.begin(), out.points.end()));
  EXPECT_EQ(out.points[*out.origin], (Point{5.0, 5.0}));
}

TEST(PairwiseDistance, Examples) {
  EXPECT_DOUBLE_EQ(pairwise_distance({0, 0}, {3, 4}, Window::plain(10.0)), 5.0);
  EXPECT_DOUBLE_EQ(pairwise_distance({0.5, 0.5}, {9.5, 0.5}, Window::torus(10.0)), 1.0);
  EXPECT_DOUBLE_EQ(pairwise_distance({1, 2}, {1, 2}, Window::torus(10.0)), 0.0);
}

TEST(PairwiseDistance, SymmetryAndTorusBounds) {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  const auto plain = Window::plain(10.0), torus = Window::torus(10.0);
  for (int i = 0; i < 2000; ++i) {
    const Point p{u(eng), u(eng)}, q{u(eng), u(eng)};
    EXPECT_EQ(plain.distance(p, q), plain.distance(q, p));
    EXPECT_EQ(torus.distance(p, q), torus.distance(q, p));
    EXPECT_LE(torus.distance(p, q), plain.distance(p, q));
    EXPECT_LE(torus.distance(p, q), 10.0 * std::sqrt(2.0) / 2.0 + 1e-12);
  }
}

TEST(GuardRadii, NoEavesdroppersGivesInfinity) {
  const auto goods = sample_ppp(1.0, Window::plain(10.0), {1, 0});
  const auto eaves = sample_ppp(0.0, Window::plain(10.0), {1, 0}, Stream::eaves);
  for (const double r : guard_radii(goods, eaves, goods.window)) EXPECT_TRUE(std::isinf(r));
}

TEST(GuardRadii, SingleEavesdropperAtKnownOffset) {
  PointSet goods, eaves;
  goods.window = eaves.window = Window::plain(10.0);
  goods.points = {{2.0, 3.0}};
  eaves.points = {{2.0, 3.0 + 1.75}};
  eaves.intensity = 1.0;
  EXPECT_DOUBLE_EQ(guard_radii(goods, eaves, goods.window)[0], 1.75);
}

TEST(GuardRadii, GridMatchesExhaustiveScanExactly) {
  int seed = 0;
  for (const auto& w : {Window::plain(25.0), Window::inflated(25.0, 4.0), Window::torus(25.0)}) {
    for (const double lambda : {0.01, 0.2, 1.0, 5.0}) {
      const SeedSpec s{42, static_cast<std::uint64_t>(seed++)};
      const auto goods = sample_ppp(1.0, w, s);
      const auto eaves = sample_ppp(lambda, w, s, Stream::eaves);
      const auto grid = guard_radii(goods, eaves, w);
      EXPECT_EQ(grid, guard_radii_bruteforce(goods, eaves, w));
      EXPECT_EQ(grid, exhaustive_nearest(goods, eaves, w));
    }
  }
}

TEST(GuardRadii, IncompatibleWindowsRejected) {
  const auto goods = sample_ppp(1.0, Window::plain(10.0), {1, 0});
  const auto eaves = sample_ppp(1.0, Window::torus(10.0), {1, 0}, Stream::eaves);
  EXPECT_THROW(guard_radii(goods, eaves, goods.window), ParameterError);
}

TEST(Thin, KeepsMarksBelowThreshold) {
  const auto ps = sample_ppp(1.0, Window::plain(20.0), {8, 0});
  const auto marks = draw_marks(ps);
  const auto half = thin(ps, marks, 0.5);
  const auto expected = std::count_if(marks.begin(), marks.end(), [](double m) { return m < 0.5; });
  EXPECT_EQ(half.size(), static_cast<std::size_t>(expected));
  EXPECT_DOUBLE_EQ(half.intensity, 0.5);
  EXPECT_EQ(thin(ps, marks, 1.0).size(), ps.size());
  EXPECT_TRUE(thin(ps, marks, 0.0).empty());
}

TEST(DegreeMargin, Cases) {
  EXPECT_DOUBLE_EQ(degree_margin(0.0, 1.5, 100.0), 1.5);
  EXPECT_DOUBLE_EQ(degree_margin(0.25, 1.0, 100.0), 10.0);
  EXPECT_DOUBLE_EQ(degree_margin(0.0001, 1.0, 100.0), 50.0);
  EXPECT_DOUBLE_EQ(degree_margin(4.0, 3.0, 100.0), 3.0);
}

TEST(DefaultCellSize, ClampedToWindow) {
  EXPECT_DOUBLE_EQ(default_cell_size(1.0, 2.0, 100.0), 2.0);
  EXPECT_DOUBLE_EQ(default_cell_size(0.25, 1.0, 100.0), 2.0);
  EXPECT_DOUBLE_EQ(default_cell_size(0.0, std::numeric_limits<double>::infinity(), 100.0), 100.0);
  EXPECT_DOUBLE_EQ(default_cell_size(1e8, 1e-6, 100.0), 100.0 / 1024.0);
}

TEST(PointsCsv, HeaderAndRoundTrip) {
  const auto ps = sample_ppp(1.0, Window::plain(5.0), {2, 2});
  std::ostringstream os;
  write_points_csv(os, ps);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "x,y");
  std::size_t i = 0;
  while (std::getline(is, line)) {
    const auto comma = line.find(',');
    EXPECT_EQ(std::stod(line.substr(0, comma)), ps.points[i].x);
    EXPECT_EQ(std::stod(line.substr(comma + 1)), ps.points[i].y);
    ++i;
  }
  EXPECT_EQ(i, ps.size());
}
