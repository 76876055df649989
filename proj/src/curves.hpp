#pragma once

#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "channel.hpp"

namespace softdec {

struct CurvePoint {
  double rate = 0.0;
  double value = 0.0;  // clipped radius / clamped exponent
  double raw = 0.0;    // pre-clip formula value
};

struct BoundCurve {
  std::string label;
  std::vector<CurvePoint> pts;  // rates strictly increasing
};

// "softdec <semver>", stamped into every CSV header.
const char* tool_version();

// start:stop:step, all in (0, 1), expanded by index so the grid is exactly
// reproducible.
std::vector<double> expand_grid(double start, double stop, double step);

struct CurveParams {
  ChannelModel ch;
  double lambda = 100.0;
  uint32_t mvars = 2;              // multivariate bound only
  PVForm form = PVForm::product;   // multivariate bound only
  uint32_t n = 15;                 // cost-function bound only
  double eps = 0.01;               // cost-function bound only
};

// bound_id: bm | gs | asd | pv | exp_a | exp_b | hamming_cost.
// hamming_cost silently skips grid points outside its admissible window.
BoundCurve sample_curve(const std::string& bound_id, const CurveParams& p,
                        const std::vector<double>& rates);

// Plain numeric table with '#'-prefixed metadata, rendered to CSV with 9
// significant digits. No timestamps: equal inputs give equal bytes.
struct CurveTable {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string csv() const;
};

// fig1a | fig1b | fig1c: radius bundles on the three channel presets.
// fig2: list-size bound vs dimension. fig3: the two exponents. fig4: the
// bivariate radius against both trivariate forms.
CurveTable preset_table(const std::string& name);

}  // namespace softdec
