#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ace/field.hpp"
#include "ace/random.hpp"

namespace testing {

inline ace::ScalarField random_field(const ace::Geometry& g, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = lo + (hi - lo) * ace::random::uniform(seed, i);
    return ace::ScalarField(g, std::move(v));
}

inline ace::ScalarField random_binary(const ace::Geometry& g, std::uint64_t seed, double p_fg = 0.5) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ace::random::uniform(seed, i) < p_fg ? 1.0 : 0.0;
    return ace::ScalarField(g, std::move(v));
}

/// Field from a function of physical coordinates (index * spacing) per axis.
inline ace::ScalarField from_function(const ace::Geometry& g, const std::function<double(double, double, double)>& f) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto idx = g.index(i);
        double x[3] = {0, 0, 0};
        for (std::size_t a = 0; a < g.ndim(); ++a) x[a] = static_cast<double>(idx[a]) * g.spacing(a);
        v[i] = f(x[0], x[1], x[2]);
    }
    return ace::ScalarField(g, std::move(v));
}

inline double dot(const ace::ScalarField& a, const ace::ScalarField& b) {
    long double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long double>(a[i]) * b[i];
    return static_cast<double>(s);
}

} // namespace testing
