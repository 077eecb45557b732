#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "vstyle/common.hpp"
#include "vstyle/rng.hpp"

namespace vstyle {

// Dense row-major float32 tensor. Images are {3,H,W} (CHW), flow fields
// {2,H,W}, feature matrices {rows,cols}. Small by design: the autodiff layer
// in graph.hpp owns all the interesting math.
struct Tensor {
    std::vector<int> shape;
    std::vector<float> v;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
        v.assign(static_cast<size_t>(numel_of(shape)), 0.0f);
    }
    Tensor(std::vector<int> s, std::vector<float> data) : shape(std::move(s)), v(std::move(data)) {
        if (static_cast<int64_t>(v.size()) != numel_of(shape))
            throw dim_error("tensor data size does not match shape");
    }

    static int64_t numel_of(const std::vector<int>& s) {
        int64_t n = 1;
        for (int d : s) {
            if (d < 0) throw dim_error("negative dimension");
            n *= d;
        }
        return n;
    }

    static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }

    static Tensor full(std::vector<int> s, float value) {
        Tensor t(std::move(s));
        std::fill(t.v.begin(), t.v.end(), value);
        return t;
    }

    static Tensor randn(std::vector<int> s, Pcg32& rng, float stddev = 1.0f) {
        Tensor t(std::move(s));
        for (float& x : t.v) x = rng.normal() * stddev;
        return t;
    }

    int64_t numel() const { return static_cast<int64_t>(v.size()); }
    int rank() const { return static_cast<int>(shape.size()); }
    int dim(int i) const { return shape[static_cast<size_t>(i)]; }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    // CHW accessors
    float& at(int c, int y, int x) {
        return v[(static_cast<size_t>(c) * shape[1] + y) * shape[2] + x];
    }
    float at(int c, int y, int x) const {
        return v[(static_cast<size_t>(c) * shape[1] + y) * shape[2] + x];
    }
    // matrix accessors
    float& m(int r, int c) { return v[static_cast<size_t>(r) * shape[1] + c]; }
    float m(int r, int c) const { return v[static_cast<size_t>(r) * shape[1] + c]; }

    bool all_finite() const {
        for (float x : v)
            if (!std::isfinite(x)) return false;
        return true;
    }

    std::string shape_str() const {
        std::string s = "[";
        for (size_t i = 0; i < shape.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(shape[i]);
        }
        return s + "]";
    }
};

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
    if (!a.same_shape(b))
        throw dim_error(std::string(what) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}

// Mean/sum accumulate in double with a fixed traversal order; deterministic
// and immune to float32 cancellation at image sizes we use.
inline double sum_d(const Tensor& t) {
    double s = 0.0;
    for (float x : t.v) s += x;
    return s;
}

inline double mean_abs_diff(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "mean_abs_diff");
    double s = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i) s += std::fabs(static_cast<double>(a.v[i]) - b.v[i]);
    return a.v.empty() ? 0.0 : s / static_cast<double>(a.v.size());
}

inline double max_abs_diff(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i)
        m = std::max(m, std::fabs(static_cast<double>(a.v[i]) - b.v[i]));
    return m;
}

}  // namespace vstyle
