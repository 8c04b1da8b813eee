#ifndef STRESS_VOLUME_HPP
#define STRESS_VOLUME_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stress/common.hpp"

namespace stress {

// Rigid map p -> rotation*p + translation, in physical mm coordinates.
struct RigidTransform {
    Mat3 rotation = Mat3::identity();
    Vec3 translation;

    bool is_identity() const {
        return rotation == Mat3::identity() && translation == Vec3(0, 0, 0);
    }

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

    RigidTransform inverse() const {
        RigidTransform r;
        r.rotation = rotation.transposed();
        r.translation = (r.rotation * translation) * -1.0;
        return r;
    }

    // this after other: p -> this(other(p)).
    RigidTransform compose(const RigidTransform& other) const {
        RigidTransform r;
        r.rotation = rotation * other.rotation;
        r.translation = rotation * other.translation + translation;
        return r;
    }
};

// 3D scalar grid, float voxels, x-fastest memory order:
// data[(z*ny + y)*nx + x]. Physical spacing in mm/voxel.
struct Volume {
    int nx = 0, ny = 0, nz = 0;
    float spacing[3] = {1.f, 1.f, 1.f};
    float origin[3] = {0.f, 0.f, 0.f};
    std::vector<float> data;

    Volume() = default;
    Volume(int nx_, int ny_, int nz_, float sx = 1.f, float sy = 1.f, float sz = 1.f);

    size_t size() const { return size_t(nx) * ny * nz; }
    size_t index(int x, int y, int z) const { return (size_t(z) * ny + y) * nx + x; }
    float& at(int x, int y, int z) { return data[index(x, y, z)]; }
    float at(int x, int y, int z) const { return data[index(x, y, z)]; }

    bool same_shape(const Volume& o) const { return nx == o.nx && ny == o.ny && nz == o.nz; }
    float max_value() const;

    // Shape >= 1 per axis, spacing > 0, data length matches, all voxels finite.
    void validate(const char* what) const;
};

struct Mask {
    int nx = 0, ny = 0, nz = 0;
    std::vector<uint8_t> data;

    size_t size() const { return size_t(nx) * ny * nz; }
    size_t index(int x, int y, int z) const { return (size_t(z) * ny + y) * nx + x; }
    bool at(int x, int y, int z) const { return data[index(x, y, z)] != 0; }
    size_t count() const;
};

// out[a,b,c] = in[c,b,a]; shape, spacing and origin have x/z swapped.
Volume transpose_xz(const Volume& v);

// Rician magnitude noise: sqrt((x+n1)^2 + n2^2), n1,n2 ~ N(0, sigma^2) with
// sigma = sigma_fraction * max(v). Deterministic in (seed); sigma_fraction==0
// returns the input unchanged.
Volume add_rician_noise(const Volume& v, double sigma_fraction, uint64_t seed);
Volume add_rician_noise_serial(const Volume& v, double sigma_fraction, uint64_t seed);

// True where intensity > threshold_fraction * max(v). Empty result is an error.
Mask foreground_mask(const Volume& v, double threshold_fraction);

// out[p] = v(T^-1(p)), trilinear in physical coordinates, zero outside the
// field of view. Exact pass-through for the identity transform.
Volume resample_affine(const Volume& v, const RigidTransform& t);
Volume resample_affine_serial(const Volume& v, const RigidTransform& t);

// Single z-plane of resample_affine(v, t), written into plane (nx*ny floats).
void resample_affine_plane(const Volume& v, const RigidTransform& t, int z, float* plane);

// STRVOL1 container: 8-byte magic "STRVOL1\0", u32 nx/ny/nz, f32 spacing[3],
// f32 origin[3], u32 dtype (0 = f32), then nx*ny*nz little-endian f32 values,
// x-fastest. Round-trips bit-exactly.
void write_strvol(const Volume& v, const std::string& path);
Volume read_strvol(const std::string& path);

}  // namespace stress

#endif
