#pragma once

#include <algorithm>
#include <cmath>

namespace vstyle {

// Polynomial sine/cosine used by the synthetic renderer. libm sin() is not
// bit-identical across platforms; this one is plain float arithmetic, so the
// rendered datasets are (compiled with -ffp-contract=off).
inline float fsin(float x) {
    constexpr float kTwoPi = 6.28318530717958647692f;
    constexpr float kPi = 3.14159265358979323846f;
    constexpr float kHalfPi = 1.57079632679489661923f;
    float k = std::nearbyint(x / kTwoPi);
    float r = x - k * kTwoPi;  // r in ~[-pi, pi]
    if (r > kHalfPi) r = kPi - r;
    if (r < -kHalfPi) r = -kPi - r;
    float r2 = r * r;
    // minimax odd polynomial on [-pi/2, pi/2]
    float p = -2.39030500e-08f;
    p = p * r2 + 2.75226648e-06f;
    p = p * r2 + -1.98408882e-04f;
    p = p * r2 + 8.33333284e-03f;
    p = p * r2 + -1.66666672e-01f;
    return r + r * r2 * p;
}

inline float fcos(float x) { return fsin(x + 1.57079632679489661923f); }

inline float clampf(float x, float lo, float hi) { return std::min(std::max(x, lo), hi); }

// 0 below e0, 1 above e1, cubic in between.
inline float smoothstep(float e0, float e1, float x) {
    float t = clampf((x - e0) / (e1 - e0), 0.0f, 1.0f);
    return t * t * (3.0f - 2.0f * t);
}

// h in [0,1) is the hue turn; s, v in [0,1].
inline void hsv_to_rgb(float h, float s, float v, float& r, float& g, float& b) {
    h = h - std::floor(h);
    float h6 = h * 6.0f;
    int i = static_cast<int>(h6);
    if (i > 5) i = 5;
    float f = h6 - static_cast<float>(i);
    float p = v * (1.0f - s);
    float q = v * (1.0f - s * f);
    float t = v * (1.0f - s * (1.0f - f));
    switch (i) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
}

inline float luma(float r, float g, float b) {
    return 0.299f * r + 0.587f * g + 0.114f * b;
}

}  // namespace vstyle
