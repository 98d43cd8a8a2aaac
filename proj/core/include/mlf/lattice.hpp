#ifndef MLF_LATTICE_HPP
#define MLF_LATTICE_HPP

#include <array>
#include <complex>
#include <set>
#include <vector>

namespace mlf {

using Complex = std::complex<double>;

/// Finite periodic grid discretizing the physical 3D space.
///
/// Sites are indexed flat and x-fastest: s = ix + nx*(iy + ny*iz).
/// All geometry is in natural units; lengths scale with `spacing`.
struct Lattice3D {
  std::array<int, 3> dims{1, 1, 1};
  double spacing = 1.0;

  int site_count() const { return dims[0] * dims[1] * dims[2]; }
  double cell_volume() const { return spacing * spacing * spacing; }
  bool operator==(const Lattice3D&) const = default;
};

using SiteIndex = int;

/// Validating constructor; throws std::invalid_argument on bad geometry.
Lattice3D make_lattice(std::array<int, 3> dims, double spacing);

std::array<int, 3> site_coords(const Lattice3D& lat, SiteIndex s);

/// Inverse of site_coords; coordinates are wrapped periodically first.
SiteIndex site_at(const Lattice3D& lat, std::array<int, 3> coords);

std::array<double, 3> position(const Lattice3D& lat, SiteIndex s);

/// Minimal-image Euclidean distance under the periodic wrap.
double distance3d(const Lattice3D& lat, SiteIndex s1, SiteIndex s2);

/// Periodic second-difference stencil applied to one value per site.
///
/// Every axis of extent >= 2 contributes f(s+e) + f(s-e) - 2 f(s); for an
/// axis of extent 2 both directions land on the same site, so that neighbor
/// is counted twice. Axes of extent 1 contribute nothing. This keeps the
/// stencil matrix symmetric and plane waves exact eigenvectors on all
/// lattice shapes.
std::vector<Complex> laplacian_apply(const Lattice3D& lat,
                                     const std::vector<Complex>& values);

/// The distinct (site, weight) pairs coupled to `s` by the stencil,
/// excluding the diagonal. Weights are per-direction counts.
std::vector<std::pair<SiteIndex, int>> stencil_neighbors(const Lattice3D& lat,
                                                         SiteIndex s);

/// Number of axes with extent >= 2.
int active_dimensions(const Lattice3D& lat);

/// Subset of lattice sites.
struct Region {
  std::set<SiteIndex> sites;

  bool contains(SiteIndex s) const { return sites.count(s) != 0; }
  std::size_t size() const { return sites.size(); }
  bool empty() const { return sites.empty(); }
  bool operator==(const Region&) const = default;
};

Region full_region(const Lattice3D& lat);
Region region_complement(const Lattice3D& lat, const Region& r);

}  // namespace mlf

#endif  // MLF_LATTICE_HPP
