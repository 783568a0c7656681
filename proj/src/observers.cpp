#include "swe2d/observers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swe {

GaugeObserver::GaugeObserver(const Mesh& mesh, const BathymetryField& bathy, double eps,
                             std::string label, double x, double y, double cadence)
    : bathy_(bathy), eps_(eps), label_(std::move(label)), cadence_(cadence) {
  const auto cell = locate_cell(mesh, x, y);
  if (!cell)
    throw std::runtime_error("gauge '" + label_ + "' at (" + std::to_string(x) + ", " +
                             std::to_string(y) + ") lies outside the mesh");
  cell_ = *cell;
}

double GaugeObserver::next_time() const {
  if (cadence_ <= 0.0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(k_) * cadence_;
}

void GaugeObserver::sample(const SimState& state) {
  if (cadence_ > 0.0 && state.t < next_time()) return;
  const double w = state.states.w[cell_];
  const double h = w - bathy_.cell_value(cell_);
  const auto [u, v] =
      desingularized_velocity(h, state.states.qx[cell_], state.states.qy[cell_], eps_);
  rows_.push_back({state.t, w, h, u, v});
  if (cadence_ > 0.0)
    while (next_time() <= state.t) ++k_;
}

SnapshotObserver::SnapshotObserver(const Mesh& mesh, const BathymetryField& bathy,
                                   std::vector<double> times, std::string directory,
                                   std::string prefix, Format format)
    : mesh_(mesh), bathy_(bathy), times_(std::move(times)), dir_(std::move(directory)),
      prefix_(std::move(prefix)), format_(format) {
  std::sort(times_.begin(), times_.end());
}

double SnapshotObserver::next_time() const {
  return next_ < times_.size() ? times_[next_] : std::numeric_limits<double>::infinity();
}

void SnapshotObserver::sample(const SimState& state) {
  while (next_ < times_.size() && state.t >= times_[next_]) {
    char stamp[32];
    std::snprintf(stamp, sizeof(stamp), "%08.3f", times_[next_]);
    const std::string ext = format_ == Format::csv ? ".csv" : ".vtk";
    const std::string path = dir_ + "/" + prefix_ + "_t" + stamp + ext;
    if (format_ == Format::csv)
      write_snapshot_csv(path, mesh_, bathy_, state.states);
    else
      write_snapshot_vtk(path, mesh_, bathy_, state.states);
    files_.push_back(path);
    ++next_;
  }
}

}  // namespace swe
