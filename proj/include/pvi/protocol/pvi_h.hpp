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

#include <vector>

#include "pvi/mech/profile.hpp"
#include "pvi/protocol/config.hpp"
#include "pvi/protocol/setup.hpp"
#include "pvi/protocol/transcript.hpp"

namespace pvi::protocol {

// Homogeneous or heterogeneous auction. Rounds: 0 setup, 1 commitment,
// T posting, T+1 key release with winner and payment determination, T+2
// audits. The setup must outlive the transcript.
RunTranscript run_pvi_h(const SystemSetup& setup, const AuctionConfig& config,
                        const std::vector<mech::SensingProfile>& profiles,
                        const RunOptions& options = {});

}  // namespace pvi::protocol
