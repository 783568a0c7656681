#pragma once

#include <functional>
#include <string>
#include <vector>

#include "swe2d/io.hpp"
#include "swe2d/stepper.hpp"

namespace swe {

/// Samples one probe point at a fixed cadence (every step when cadence <= 0).
/// Records cell-mean surface, depth and desingularized velocity of the cell
/// containing the probe.
class GaugeObserver : public Observer {
public:
  GaugeObserver(const Mesh& mesh, const BathymetryField& bathy, double eps, std::string label,
                double x, double y, double cadence);

  double next_time() const override;
  void sample(const SimState& state) override;

  const std::string& label() const { return label_; }
  const std::vector<GaugeRow>& rows() const { return rows_; }
  void write_csv(const std::string& path) const { write_gauge_csv(path, rows_); }

private:
  const BathymetryField& bathy_;
  double eps_;
  std::string label_;
  int cell_;
  double cadence_;
  long k_ = 0;
  std::vector<GaugeRow> rows_;
};

/// Writes a full-field snapshot at each requested time.
class SnapshotObserver : public Observer {
public:
  enum class Format { csv, vtk };
  SnapshotObserver(const Mesh& mesh, const BathymetryField& bathy, std::vector<double> times,
                   std::string directory, std::string prefix, Format format);

  double next_time() const override;
  void sample(const SimState& state) override;
  const std::vector<std::string>& files() const { return files_; }

private:
  const Mesh& mesh_;
  const BathymetryField& bathy_;
  std::vector<double> times_;  // sorted
  std::size_t next_ = 0;
  std::string dir_, prefix_;
  Format format_;
  std::vector<std::string> files_;
};

/// Calls a function on every step (handy for invariant tracking in tests).
class CallbackObserver : public Observer {
public:
  explicit CallbackObserver(std::function<void(const SimState&)> fn) : fn_(std::move(fn)) {}
  void sample(const SimState& state) override { fn_(state); }

private:
  std::function<void(const SimState&)> fn_;
};

}  // namespace swe
