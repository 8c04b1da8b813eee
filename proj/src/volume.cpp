#include "stress/volume.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace stress {

Volume::Volume(int nx_, int ny_, int nz_, float sx, float sy, float sz)
    : nx(nx_), ny(ny_), nz(nz_), spacing{sx, sy, sz} {
    if (nx < 1 || ny < 1 || nz < 1) throw Error(ErrCode::shape, "volume shape must be >= 1 per axis");
    if (!(sx > 0.f && sy > 0.f && sz > 0.f)) throw Error(ErrCode::shape, "volume spacing must be > 0");
    data.assign(size(), 0.f);
}

float Volume::max_value() const {
    float m = data.empty() ? 0.f : data[0];
    for (float v : data)
        if (v > m) m = v;
    return m;
}

void Volume::validate(const char* what) const {
    if (nx < 1 || ny < 1 || nz < 1)
        throw Error(ErrCode::shape, std::string(what) + ": shape must be >= 1 per axis");
    for (int i = 0; i < 3; ++i)
        if (!(spacing[i] > 0.f))
            throw Error(ErrCode::shape, std::string(what) + ": spacing must be > 0");
    if (data.size() != size())
        throw Error(ErrCode::shape, std::string(what) + ": data length does not match shape");
    for (float v : data)
        if (!std::isfinite(v))
            throw Error(ErrCode::state, std::string(what) + ": non-finite voxel value");
}

size_t Mask::count() const {
    size_t c = 0;
    for (uint8_t v : data) c += (v != 0);
    return c;
}

Volume transpose_xz(const Volume& v) {
    Volume out;
    out.nx = v.nz;
    out.ny = v.ny;
    out.nz = v.nx;
    out.spacing[0] = v.spacing[2];
    out.spacing[1] = v.spacing[1];
    out.spacing[2] = v.spacing[0];
    out.origin[0] = v.origin[2];
    out.origin[1] = v.origin[1];
    out.origin[2] = v.origin[0];
    out.data.resize(v.size());
    for (int z = 0; z < out.nz; ++z)
        for (int y = 0; y < out.ny; ++y)
            for (int x = 0; x < out.nx; ++x) out.data[out.index(x, y, z)] = v.at(z, y, x);
    return out;
}

static Volume rician_impl(const Volume& v, double sigma_fraction, uint64_t seed, bool parallel) {
    if (sigma_fraction < 0) throw Error(ErrCode::state, "negative sigma_fraction");
    if (sigma_fraction == 0) return v;
    const double sigma = sigma_fraction * double(v.max_value());
    Volume out = v;
    const int64_t n = int64_t(v.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (int64_t i = 0; i < n; ++i) {
        double n1, n2;
        gauss_pair_at(seed, uint64_t(i), n1, n2);
        double x = double(v.data[size_t(i)]);
        double m = std::sqrt((x + sigma * n1) * (x + sigma * n1) + sigma * n2 * sigma * n2);
        out.data[size_t(i)] = std::max(0.f, float(m));
    }
    return out;
}

Volume add_rician_noise(const Volume& v, double sigma_fraction, uint64_t seed) {
    return rician_impl(v, sigma_fraction, seed, true);
}

Volume add_rician_noise_serial(const Volume& v, double sigma_fraction, uint64_t seed) {
    return rician_impl(v, sigma_fraction, seed, false);
}

Mask foreground_mask(const Volume& v, double threshold_fraction) {
    if (threshold_fraction < 0 || threshold_fraction >= 1)
        throw Error(ErrCode::state, "threshold_fraction must be in [0, 1)");
    Mask m;
    m.nx = v.nx;
    m.ny = v.ny;
    m.nz = v.nz;
    m.data.resize(v.size());
    const float thr = float(threshold_fraction * double(v.max_value()));
    size_t n = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        m.data[i] = v.data[i] > thr ? 1 : 0;
        n += m.data[i];
    }
    if (n == 0) throw Error(ErrCode::state, "empty mask");
    return m;
}

// Trilinear sample at continuous voxel coordinates, zero outside [0, n-1]^3.
static inline double sample_trilinear(const Volume& v, double fx, double fy, double fz) {
    if (fx < -1.0 || fy < -1.0 || fz < -1.0 || fx > v.nx || fy > v.ny || fz > v.nz) return 0.0;
    int x0 = int(std::floor(fx)), y0 = int(std::floor(fy)), z0 = int(std::floor(fz));
    double tx = fx - x0, ty = fy - y0, tz = fz - z0;
    double acc = 0.0;
    for (int dz = 0; dz <= 1; ++dz) {
        int z = z0 + dz;
        if (z < 0 || z >= v.nz) continue;
        double wz = dz ? tz : 1.0 - tz;
        for (int dy = 0; dy <= 1; ++dy) {
            int y = y0 + dy;
            if (y < 0 || y >= v.ny) continue;
            double wy = dy ? ty : 1.0 - ty;
            for (int dx = 0; dx <= 1; ++dx) {
                int x = x0 + dx;
                if (x < 0 || x >= v.nx) continue;
                double wx = dx ? tx : 1.0 - tx;
                acc += wz * wy * wx * double(v.at(x, y, z));
            }
        }
    }
    return acc;
}

void resample_affine_plane(const Volume& v, const RigidTransform& t, int z, float* plane) {
    if (t.is_identity()) {
        std::memcpy(plane, v.data.data() + v.index(0, 0, z), sizeof(float) * size_t(v.nx) * v.ny);
        return;
    }
    const RigidTransform inv = t.inverse();
    for (int y = 0; y < v.ny; ++y) {
        for (int x = 0; x < v.nx; ++x) {
            Vec3 p{double(v.origin[0]) + double(x) * v.spacing[0],
                   double(v.origin[1]) + double(y) * v.spacing[1],
                   double(v.origin[2]) + double(z) * v.spacing[2]};
            Vec3 q = inv.apply(p);
            double fx = (q.x - double(v.origin[0])) / v.spacing[0];
            double fy = (q.y - double(v.origin[1])) / v.spacing[1];
            double fz = (q.z - double(v.origin[2])) / v.spacing[2];
            plane[size_t(y) * v.nx + x] = float(sample_trilinear(v, fx, fy, fz));
        }
    }
}

static Volume resample_impl(const Volume& v, const RigidTransform& t, bool parallel) {
    double det = t.rotation.det();
    if (std::abs(det) < 1e-12) throw Error(ErrCode::state, "singular transform");
    if (t.is_identity()) return v;
    Volume out = v;
#pragma omp parallel for schedule(static) if (parallel)
    for (int z = 0; z < v.nz; ++z) {
        resample_affine_plane(v, t, z, out.data.data() + out.index(0, 0, z));
    }
    return out;
}

Volume resample_affine(const Volume& v, const RigidTransform& t) { return resample_impl(v, t, true); }

Volume resample_affine_serial(const Volume& v, const RigidTransform& t) {
    return resample_impl(v, t, false);
}

// ---------------------------------------------------------------------------
// STRVOL1 I/O. Headers are assembled field by field; the in-memory layout of
// the payload already matches the file (little-endian f32, x-fastest). Only
// little-endian hosts are supported.
// ---------------------------------------------------------------------------

static const char kMagic[8] = {'S', 'T', 'R', 'V', 'O', 'L', '1', '\0'};

template <typename T>
static void put(std::ofstream& f, T v) {
    f.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
static T get(std::ifstream& f) {
    T v{};
    f.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

void write_strvol(const Volume& v, const std::string& path) {
    v.validate("write_strvol");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrCode::format, "cannot open for writing: " + path);
    f.write(kMagic, 8);
    put<uint32_t>(f, uint32_t(v.nx));
    put<uint32_t>(f, uint32_t(v.ny));
    put<uint32_t>(f, uint32_t(v.nz));
    for (int i = 0; i < 3; ++i) put<float>(f, v.spacing[i]);
    for (int i = 0; i < 3; ++i) put<float>(f, v.origin[i]);
    put<uint32_t>(f, 0u);  // dtype: f32
    f.write(reinterpret_cast<const char*>(v.data.data()), std::streamsize(v.size() * sizeof(float)));
    if (!f) throw Error(ErrCode::format, "short write: " + path);
}

Volume read_strvol(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrCode::format, "cannot open: " + path);
    char magic[8];
    f.read(magic, 8);
    if (!f || std::memcmp(magic, kMagic, 8) != 0)
        throw Error(ErrCode::format, "not a STRVOL1 file: " + path);
    Volume v;
    v.nx = int(get<uint32_t>(f));
    v.ny = int(get<uint32_t>(f));
    v.nz = int(get<uint32_t>(f));
    for (int i = 0; i < 3; ++i) v.spacing[i] = get<float>(f);
    for (int i = 0; i < 3; ++i) v.origin[i] = get<float>(f);
    uint32_t dtype = get<uint32_t>(f);
    if (dtype != 0) throw Error(ErrCode::format, "unsupported dtype code in " + path);
    if (v.nx < 1 || v.ny < 1 || v.nz < 1 || !f)
        throw Error(ErrCode::format, "bad STRVOL1 header in " + path);
    v.data.resize(v.size());
    f.read(reinterpret_cast<char*>(v.data.data()), std::streamsize(v.size() * sizeof(float)));
    if (!f) throw Error(ErrCode::format, "truncated STRVOL1 payload in " + path);
    return v;
}

Mat3 Mat3::inverse() const {
    double d = det();
    if (std::abs(d) < 1e-12) throw Error(ErrCode::state, "singular matrix");
    Mat3 r;
    r.m[0] = (m[4] * m[8] - m[5] * m[7]) / d;
    r.m[1] = (m[2] * m[7] - m[1] * m[8]) / d;
    r.m[2] = (m[1] * m[5] - m[2] * m[4]) / d;
    r.m[3] = (m[5] * m[6] - m[3] * m[8]) / d;
    r.m[4] = (m[0] * m[8] - m[2] * m[6]) / d;
    r.m[5] = (m[2] * m[3] - m[0] * m[5]) / d;
    r.m[6] = (m[3] * m[7] - m[4] * m[6]) / d;
    r.m[7] = (m[1] * m[6] - m[0] * m[7]) / d;
    r.m[8] = (m[0] * m[4] - m[1] * m[3]) / d;
    return r;
}

}  // namespace stress
