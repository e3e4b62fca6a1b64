#include "pcs/quadrature.hpp"

#include <map>
#include <mutex>

#include "pcs/reduce.hpp"

#ifdef PCS_HAVE_OPENMP
#include <omp.h>
#endif

namespace pcs {

namespace {
std::mutex cache_mutex;
std::map<int, std::pair<std::vector<double>, std::vector<double>>> gl_cache;

// Newton iteration on P_n; standard Golub-Welsch-free construction.
void compute_gl(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int it = 0; it < 100; ++it) {
            p0 = 1;
            p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        double ww = 2.0 / ((1 - t * t) * dp * dp);
        w[i] = ww;
        w[n - 1 - i] = ww;
    }
    if (n % 2) x[n / 2] = 0;
}

const std::pair<std::vector<double>, std::vector<double>>& cached(int n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = gl_cache.find(n);
    if (it == gl_cache.end()) {
        std::pair<std::vector<double>, std::vector<double>> nw;
        compute_gl(n, nw.first, nw.second);
        it = gl_cache.emplace(n, std::move(nw)).first;
    }
    return it->second;
}
}  // namespace

void gauss_legendre(int n, std::span<double> nodes, std::span<double> weights) {
    const auto& nw = cached(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = nw.first[i];
        weights[i] = nw.second[i];
    }
}

const std::vector<double>& gl_nodes(int n) { return cached(n).first; }
const std::vector<double>& gl_weights(int n) { return cached(n).second; }

void PanelRule::add_panel(double a, double b, int n) {
    const auto& xs = gl_nodes(n);
    const auto& ws = gl_weights(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        x.push_back(mid + half * xs[i]);
        w.push_back(half * ws[i]);
    }
}

PanelRule uniform_panels(double a, double b, int panels, int n) {
    PanelRule r;
    for (int p = 0; p < panels; ++p)
        r.add_panel(a + (b - a) * p / panels, a + (b - a) * (p + 1) / panels, n);
    return r;
}

PanelRule graded_panels_toward(double a, double b, double min_width, int n) {
    PanelRule r;
    double len = b - a;
    std::vector<double> cuts;  // offsets from b, largest first
    double wdt = len / 2;
    cuts.push_back(len);
    while (wdt > min_width) {
        cuts.push_back(wdt);
        wdt /= 2;
    }
    cuts.push_back(0.0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        r.add_panel(b - cuts[i], b - cuts[i + 1], n);
    return r;
}

Integral integrate_1d(const std::function<double(double)>& f, const PanelRule& full,
                      const PanelRule& half) {
    auto run = [&](const PanelRule& rule) {
        return deterministic_sum<double>(rule.x.size(),
                                         [&](std::size_t i) { return rule.w[i] * f(rule.x[i]); });
    };
    double v = run(full);
    double vh = run(half);
    return {v, std::abs(v - vh)};
}

int max_threads() {
#ifdef PCS_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_thread_cap(int n) {
#ifdef PCS_HAVE_OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace pcs
