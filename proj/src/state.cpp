// Copyright 2026 The kronsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kronsim/state.hpp"

#include <algorithm>
#include <cmath>

namespace kronsim {

StateVector::StateVector(int width, std::size_t batch) : width_(width), batch_(batch) {
  if (width < 1 || width > 40) throw InvalidArgument("StateVector: width must be in [1, 40]");
  if (batch < 1) throw InvalidArgument("StateVector: batch must be at least 1");
  amps_.assign(batch * dim(), Complex{});
}

std::vector<double> StateVector::norms() const {
  std::vector<double> out(batch_);
  for (std::size_t b = 0; b < batch_; ++b) {
    double s = 0.0;
    for (const auto& a : row(b)) s += std::norm(a);
    out[b] = std::sqrt(s);
  }
  return out;
}

StateVector StateVector::slice(std::size_t first, std::size_t count) const {
  if (first + count > batch_ || count == 0) throw InvalidArgument("StateVector::slice: out of range");
  StateVector out(width_, count);
  std::copy_n(amps_.begin() + static_cast<std::ptrdiff_t>(first * dim()), count * dim(),
              out.amps_.begin());
  return out;
}

StateVector zero_state(int width, std::size_t batch) {
  StateVector s(width, batch);
  for (std::size_t b = 0; b < batch; ++b) s.at(b, 0) = 1.0;
  return s;
}

StateVector state_from_rows(int width, const std::vector<std::vector<Complex>>& rows) {
  StateVector s(width, rows.size());
  for (std::size_t b = 0; b < rows.size(); ++b) {
    if (rows[b].size() != s.dim()) throw InvalidArgument("state_from_rows: row length must be 2^width");
    std::copy(rows[b].begin(), rows[b].end(), s.row(b).begin());
  }
  return s;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.width() != b.width() || a.batch() != b.batch())
    throw InvalidArgument("max_abs_diff: state shapes differ");
  return max_abs_diff(a.amplitudes(), b.amplitudes());
}

}  // namespace kronsim
