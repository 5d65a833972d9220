#include "minthint/exec/spectra.hpp"

#include <algorithm>

#include "minthint/parallel.hpp"

namespace minthint::exec {

int Spectra::passing() const { return static_cast<int>(std::count(passed.begin(), passed.end(), true)); }

int Spectra::failing() const { return static_cast<int>(passed.size()) - passing(); }

const StatementSpectrum* Spectra::at(int line) const {
  auto it = std::lower_bound(statements.begin(), statements.end(), line,
                             [](const StatementSpectrum& s, int l) { return s.line < l; });
  return it != statements.end() && it->line == line ? &*it : nullptr;
}

Spectra collect_spectra(const lang::Program& p, const TestSuite& tests, std::uint64_t step_limit, unsigned jobs) {
  std::vector<Verdict> verdicts(tests.size());
  RunOptions opts;
  opts.step_limit = step_limit;
  parallel_for(tests.size(), jobs, [&](std::size_t i) { verdicts[i] = run_test(p, tests[i], opts); });

  Spectra out;
  for (const auto* s : p.statements()) {
    if (lang::is_executable(*s)) out.statements.push_back(StatementSpectrum{s->line});
  }
  std::sort(out.statements.begin(), out.statements.end(),
            [](const auto& a, const auto& b) { return a.line < b.line; });
  for (const auto& v : verdicts) {
    out.passed.push_back(v.passed);
    for (auto& st : out.statements) {
      bool hit = v.run.covers(st.line);
      if (v.passed) {
        ++(hit ? st.ep : st.np);
      } else {
        ++(hit ? st.ef : st.nf);
      }
    }
  }
  return out;
}

}  // namespace minthint::exec
