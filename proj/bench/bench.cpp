// Copyright 2026 The kotzig Authors
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

// Times each OpenMP kernel against its serial reference and checks that the
// two agree. Usage: kotzig_bench [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "kotzig/boolean_forms.hpp"
#include "kotzig/capacity.hpp"
#include "kotzig/events.hpp"
#include "kotzig/parameters.hpp"

namespace {

using namespace kotzig;
using Clock = std::chrono::steady_clock;

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

bool row(const std::string& name, int reps, const std::function<bool()>& parallel,
         const std::function<bool()>& serial, const std::function<bool()>& agree) {
  const double tp = best_of(reps, [&] { parallel(); });
  const double ts = best_of(reps, [&] { serial(); });
  const bool ok = agree();
  std::printf("%-34s %12.6f %12.6f %8.2fx  %s\n", name.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0,
              ok ? "agree" : "DISAGREE");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-34s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");
  bool ok = true;

  for (const char* text : {"15,25,34,45", "16,26,36,46,56", "16,25,34,36,45"}) {
    const Graph g = parse_graph(text);
    const StabilizerGroup s = enumerate_group(g);
    AlphaResult ap, as;
    ok &= row(std::string("alpha strategies ") + text, reps, [&] { ap = alpha_by_strategies(s); return true; },
              [&] { as = alpha_by_strategies_serial(s); return true; },
              [&] { return ap.alpha == as.alpha && ap.witness.bits == as.witness.bits; });
    EventGraph hp, hs;
    ok &= row(std::string("build H ") + text, reps, [&] { hp = build_H(s); return true; },
              [&] { hs = build_H_serial(s); return true; }, [&] { return hp == hs; });
  }

  {
    const CubicForm f = cubic_form(Graph::cycle(22));
    std::int64_t wp = 0, ws = 0;
    ok &= row("truth-table weight C22", reps, [&] { wp = weight(f); return true; },
              [&] { ws = weight_serial(f); return true; }, [&] { return wp == ws; });
  }

  {
    const MeasurementFamily fam = build_measurement_family(parse_graph("16,26,36,46,56"), AncillaMode::Shared);
    ProtocolVerdict vp, vs;
    ok &= row("orthogonality ST6 (shared)", reps, [&] { vp = verify_orthogonality(fam); return true; },
              [&] { vs = verify_orthogonality_serial(fam); return true; },
              [&] { return vp.orthogonality_ok == vs.orthogonality_ok && vp.failures.size() == vs.failures.size(); });
  }
  return ok ? 0 : 1;
}
