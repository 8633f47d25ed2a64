#include "mosar/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

namespace mosar {
namespace {

double squared_distance(const Point2& a, const Point2& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

bool strictly_dominates(const Point2& a, const Point2& b) {
    return a[0] <= b[0] && a[1] <= b[1] && (a[0] < b[0] || a[1] < b[1]);
}

}  // namespace

std::size_t cardinality(const ParetoSet& ps) { return ps.points.size(); }

std::vector<Point2> pareto_filter_2d(std::vector<Point2> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Point2> front;
    double best_y = std::numeric_limits<double>::infinity();
    for (const Point2& p : points) {
        if (p[1] < best_y) {
            front.push_back(p);
            best_y = p[1];
        }
    }
    return front;
}

ParetoSet feasible_projection(std::span<const ArchiveEntry> archive,
                              const ProblemDescriptor& descriptor, double tol) {
    ParetoSet ps;
    const auto i0 = static_cast<std::size_t>(descriptor.metric_projection[0]);
    const auto i1 = static_cast<std::size_t>(descriptor.metric_projection[1]);
    for (const ArchiveEntry& e : archive) {
        if (e.objectives.feasible(tol))
            ps.points.push_back({e.objectives.values[i0], e.objectives.values[i1]});
    }
    return ps;
}

double igd(const ParetoSet& pf, const ParetoSet& pf_star) {
    if (pf_star.points.empty()) throw std::invalid_argument("igd: empty reference front");
    if (pf.points.empty()) return std::numeric_limits<double>::infinity();
    double total = 0.0;
    for (const Point2& ref : pf_star.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point2& p : pf.points) best = std::min(best, squared_distance(ref, p));
        total += std::sqrt(best);
    }
    return total / static_cast<double>(pf_star.points.size());
}

double hypervolume_2d(const ParetoSet& pf, const ParetoSet& reference_source) {
    if (reference_source.points.empty())
        throw std::invalid_argument("hypervolume_2d: empty reference source");
    Point2 r{-std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity()};
    for (const Point2& p : reference_source.points) {
        r[0] = std::max(r[0], p[0]);
        r[1] = std::max(r[1], p[1]);
    }
    r[0] *= 1.1;
    r[1] *= 1.1;
    if (!(r[0] > 0.0) || !(r[1] > 0.0)) return 0.0;
    if (pf.points.empty()) return 0.0;

    // Covered area is measured inside the box [origin, r*]; clip each point
    // into the box and drop the ones past the reference point.
    std::vector<Point2> clipped;
    for (const Point2& p : pf.points) {
        const Point2 q{std::max(p[0], 0.0), std::max(p[1], 0.0)};
        if (q[0] < r[0] && q[1] < r[1]) clipped.push_back(q);
    }
    const std::vector<Point2> staircase = pareto_filter_2d(std::move(clipped));
    double area = 0.0;
    for (std::size_t i = 0; i < staircase.size(); ++i) {
        const double next_x = i + 1 < staircase.size() ? staircase[i + 1][0] : r[0];
        area += (next_x - staircase[i][0]) * (r[1] - staircase[i][1]);
    }
    return area / (r[0] * r[1]);
}

double coverage(const ParetoSet& a, const ParetoSet& b) {
    if (a.points.empty() && b.points.empty()) return 0.5;
    if (b.points.empty()) return 1.0;
    if (a.points.empty()) return 0.0;
    std::size_t dominated = 0;
    for (const Point2& q : b.points) {
        for (const Point2& p : a.points) {
            if (strictly_dominates(p, q)) {
                ++dominated;
                break;
            }
        }
    }
    return static_cast<double>(dominated) / static_cast<double>(b.points.size());
}

ObjectiveExtents spacing_standardization(const ParetoSet& ps) {
    ObjectiveExtents ext;
    ext.min = {std::numeric_limits<double>::infinity(),
               std::numeric_limits<double>::infinity()};
    ext.max = {-std::numeric_limits<double>::infinity(),
               -std::numeric_limits<double>::infinity()};
    for (const Point2& p : ps.points) {
        for (int m = 0; m < 2; ++m) {
            ext.min[static_cast<std::size_t>(m)] =
                std::min(ext.min[static_cast<std::size_t>(m)], p[static_cast<std::size_t>(m)]);
            ext.max[static_cast<std::size_t>(m)] =
                std::max(ext.max[static_cast<std::size_t>(m)], p[static_cast<std::size_t>(m)]);
        }
    }
    return ext;
}

double minimal_spacing(const ParetoSet& ps, const ObjectiveExtents& standardization) {
    const std::size_t n = ps.points.size();
    if (n <= 1) return 1.0;

    std::array<double, 2> divisor;
    for (std::size_t m = 0; m < 2; ++m) {
        const double w = std::abs(standardization.max[m] - standardization.min[m]);
        divisor[m] = w > 0.0 ? w : 1.0;
    }
    auto distance = [&](std::size_t i, std::size_t j) {
        return std::abs(ps.points[i][0] - ps.points[j][0]) / divisor[0] +
               std::abs(ps.points[i][1] - ps.points[j][1]) / divisor[1];
    };

    // Greedy nearest-neighbor chain from every seed; keep the chain with the
    // minimum total distance.
    std::vector<double> best_chain;
    double best_total = std::numeric_limits<double>::infinity();
    std::vector<char> marked(n);
    std::vector<double> chain;
    for (std::size_t seed = 0; seed < n; ++seed) {
        std::fill(marked.begin(), marked.end(), 0);
        chain.clear();
        marked[seed] = 1;
        std::size_t last = seed;
        double total = 0.0;
        for (std::size_t step = 1; step < n; ++step) {
            std::size_t nearest = n;
            double nearest_d = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j) {
                if (marked[j]) continue;
                const double d = distance(last, j);
                if (d < nearest_d) {
                    nearest_d = d;
                    nearest = j;
                }
            }
            marked[nearest] = 1;
            chain.push_back(nearest_d);
            total += nearest_d;
            last = nearest;
        }
        if (total < best_total) {
            best_total = total;
            best_chain = chain;
        }
    }

    const double mean =
        best_total / static_cast<double>(best_chain.size());
    double var = 0.0;
    for (double d : best_chain) var += (mean - d) * (mean - d);
    return std::sqrt(var / static_cast<double>(best_chain.size()));
}

double minimal_spacing(const ParetoSet& ps) {
    return minimal_spacing(ps, spacing_standardization(ps));
}

std::vector<double> accounted_proportion(std::span<const std::vector<ParetoSet>> algorithm_runs,
                                         bool literal_numerator) {
    std::vector<std::vector<Point2>> per_algorithm_front;
    std::vector<Point2> all_points;
    for (const auto& runs : algorithm_runs) {
        std::vector<Point2> merged;
        for (const ParetoSet& ps : runs)
            merged.insert(merged.end(), ps.points.begin(), ps.points.end());
        all_points.insert(all_points.end(), merged.begin(), merged.end());
        per_algorithm_front.push_back(pareto_filter_2d(std::move(merged)));
    }
    const std::vector<Point2> combined = pareto_filter_2d(std::move(all_points));

    std::vector<double> proportions(algorithm_runs.size(), 0.0);
    if (combined.empty()) return proportions;
    for (std::size_t i = 0; i < per_algorithm_front.size(); ++i) {
        std::size_t count;
        if (literal_numerator) {
            count = per_algorithm_front[i].size();
        } else {
            std::vector<Point2> kept;
            std::set_intersection(per_algorithm_front[i].begin(), per_algorithm_front[i].end(),
                                  combined.begin(), combined.end(), std::back_inserter(kept));
            count = kept.size();
        }
        proportions[i] = static_cast<double>(count) / static_cast<double>(combined.size());
    }
    return proportions;
}

ParetoSet reference_front(std::string_view problem_name, int resolution) {
    if (resolution < 1000)
        throw std::invalid_argument("reference_front: resolution must be >= 1000");

    double lo, hi;
    std::unique_ptr<Problem> problem;
    if (problem_name == "srn") {
        problem = make_problem("srn");
        lo = -20.0;
        hi = 20.0;
    } else if (problem_name == "tnk") {
        problem = make_problem("tnk");
        // Every feasible TNK point sits inside the disk centered at
        // (0.5, 0.5) with radius sqrt(0.5), so [0, 1.21]^2 covers the whole
        // feasible region at much finer granularity than the search box.
        lo = 1e-9;
        hi = 1.21;
    } else {
        throw std::invalid_argument("reference_front: only srn and tnk have reference fronts");
    }

    const ProblemDescriptor& d = problem->descriptor();
    const auto i0 = static_cast<std::size_t>(d.metric_projection[0]);
    const auto i1 = static_cast<std::size_t>(d.metric_projection[1]);
    const double step = (hi - lo) / static_cast<double>(resolution - 1);
    std::vector<Point2> feasible;
    std::array<double, 2> x{};
    for (int i = 0; i < resolution; ++i) {
        x[0] = lo + step * static_cast<double>(i);
        for (int j = 0; j < resolution; ++j) {
            x[1] = lo + step * static_cast<double>(j);
            const ObjectiveVector f = problem->evaluate(x);
            if (f.feasible()) feasible.push_back({f.values[i0], f.values[i1]});
        }
    }
    ParetoSet front;
    front.points = pareto_filter_2d(std::move(feasible));
    return front;
}

ParetoSet cached_reference_front(std::string_view problem_name, int resolution,
                                 const std::filesystem::path& cache_dir) {
    const std::filesystem::path file =
        cache_dir / ("ref_" + std::string(problem_name) + "_" + std::to_string(resolution) +
                     ".txt");
    if (std::filesystem::exists(file)) {
        std::ifstream in(file);
        ParetoSet front;
        double a, b;
        while (in >> a >> b) front.points.push_back({a, b});
        if (!front.points.empty()) return front;
    }
    ParetoSet front = reference_front(problem_name, resolution);
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write reference front cache: " + file.string());
    char buf[80];
    for (const Point2& p : front.points) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p[0], p[1]);
        out << buf;
    }
    return front;
}

}  // namespace mosar
