// Copyright 2026 The qkdlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKDLAB_QKDLAB_HPP
#define QKDLAB_QKDLAB_HPP

#include "qkdlab/basis.hpp"
#include "qkdlab/bb84.hpp"
#include "qkdlab/bitio.hpp"
#include "qkdlab/channel.hpp"
#include "qkdlab/e91.hpp"
#include "qkdlab/experiment.hpp"
#include "qkdlab/gates.hpp"
#include "qkdlab/noise.hpp"
#include "qkdlab/randtest.hpp"
#include "qkdlab/report.hpp"
#include "qkdlab/rng.hpp"
#include "qkdlab/sift.hpp"
#include "qkdlab/statevector.hpp"
#include "qkdlab/stats.hpp"
#include "qkdlab/suffix_array.hpp"
#include "qkdlab/transcript.hpp"

#endif // QKDLAB_QKDLAB_HPP
