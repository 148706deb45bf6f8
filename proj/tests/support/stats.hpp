// Copyright 2026 The PVI Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <boost/math/distributions/chi_squared.hpp>

#include <cstddef>
#include <vector>

namespace pvi::testing {

// p-value of the chi-square test of homogeneity between two histograms.
// Buckets empty in both samples are dropped.
inline double two_sample_p_value(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  double na = 0, nb = 0;
  for (std::size_t v : a) na += static_cast<double>(v);
  for (std::size_t v : b) nb += static_cast<double>(v);
  double stat = 0;
  int buckets = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double total = static_cast<double>(a[k] + b[k]);
    if (total == 0) continue;
    ++buckets;
    double ea = total * na / (na + nb), eb = total * nb / (na + nb);
    stat += (a[k] - ea) * (a[k] - ea) / ea + (b[k] - eb) * (b[k] - eb) / eb;
  }
  if (buckets < 2) return 1.0;
  boost::math::chi_squared dist(buckets - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace pvi::testing
