#ifndef STRESS_COMMON_HPP
#define STRESS_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace stress {

// ---------------------------------------------------------------------------
// Errors. Every failure surfaced to the CLI carries one of four categories so
// scripts can match on a stable prefix.
// ---------------------------------------------------------------------------

enum class ErrCode { config, format, shape, state };

class Error : public std::runtime_error {
public:
    Error(ErrCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    ErrCode code() const { return code_; }

    const char* prefix() const {
        switch (code_) {
            case ErrCode::config: return "E_CONFIG";
            case ErrCode::format: return "E_FORMAT";
            case ErrCode::shape: return "E_SHAPE";
            case ErrCode::state: return "E_STATE";
        }
        return "E_STATE";
    }

    std::string full_message() const { return std::string(prefix()) + ": " + what(); }

private:
    ErrCode code_;
};

// ---------------------------------------------------------------------------
// Small dense linear algebra for rigid geometry. Doubles throughout; volumes
// hold float voxels but all coordinate math runs in double.
// ---------------------------------------------------------------------------

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        double n = norm();
        return {x / n, y / n, z / n};
    }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

// Row-major 3x3 matrix.
struct Mat3 {
    double m[9] = {0, 0, 0, 0, 0, 0, 0, 0, 0};

    static Mat3 identity() {
        Mat3 r;
        r.m[0] = r.m[4] = r.m[8] = 1.0;
        return r;
    }

    double& operator()(int r, int c) { return m[r * 3 + c]; }
    double operator()(int r, int c) const { return m[r * 3 + c]; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    // Throws Error(state) when the matrix is singular.
    Mat3 inverse() const;

    Vec3 col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }
    void set_col(int c, const Vec3& v) {
        m[c] = v.x;
        m[3 + c] = v.y;
        m[6 + c] = v.z;
    }

    bool operator==(const Mat3& o) const {
        for (int i = 0; i < 9; ++i)
            if (m[i] != o.m[i]) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Deterministic random numbers. std::mt19937_64 has a fully specified stream,
// but the standard distributions do not, so uniforms and normals are derived
// here explicitly. Same seed => same values on any platform.
// ---------------------------------------------------------------------------

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Decorrelated sub-stream seed, e.g. derive_seed(seed, 3) for stream 3.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1).
    double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; safe as a log() argument.
    double uniform_pos() { return double((gen_() >> 11) + 1) * 0x1.0p-53; }

    // Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_pos();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Uniform integer in [0, n); Lemire-style multiply-shift (no modulo bias
    // worth caring about at these ranges, and fully deterministic).
    uint64_t below(uint64_t n) {
        return uint64_t((static_cast<unsigned __int128>(gen_()) * n) >> 64);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0;
    bool have_spare_ = false;
};

// Counter-based standard normal pair: pure function of (seed, counter), usable
// from parallel loops without sharing generator state.
inline void gauss_pair_at(uint64_t seed, uint64_t counter, double& n1, double& n2) {
    uint64_t a = splitmix64(seed ^ splitmix64(counter * 2 + 1));
    uint64_t b = splitmix64(seed ^ splitmix64(counter * 2 + 2));
    double u1 = double((a >> 11) + 1) * 0x1.0p-53;
    double u2 = double(b >> 11) * 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * M_PI * u2;
    n1 = r * std::cos(ang);
    n2 = r * std::sin(ang);
}

}  // namespace stress

#endif
