#include "minthint/driver/report.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "minthint/lang/printer.hpp"

namespace minthint::driver {

namespace {

std::string fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

}  // namespace

void write_hint_table(std::ostream& out, const std::vector<hints::Hint>& ranked) {
  out << std::left << std::setw(6) << "rank" << std::setw(6) << "line" << std::setw(8) << "score" << "hint\n";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& h = ranked[i];
    out << std::setw(6) << i + 1 << std::setw(6) << h.line << std::setw(8) << fixed(h.score, 4) << h.text() << '\n';
  }
}

void write_hint_json(std::ostream& out, const std::vector<hints::Hint>& ranked) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& h : ranked) arr.push_back(to_json(h));
  out << arr.dump(2) << '\n';
}

void write_corpus_table(std::ostream& out, const CorpusReport& report) {
  out << "# rank: position of the first hint matching the known repair (0 = none)\n";
  out << std::left << std::setw(20) << "task" << std::setw(6) << "rank" << std::setw(7) << "hints" << std::setw(12)
      << "eliminated" << std::setw(11) << "discarded" << "status\n";
  for (const auto& t : report.tasks) {
    out << std::setw(20) << t.id << std::setw(6) << t.rank << std::setw(7) << t.total_hints << std::setw(12)
        << t.eliminated << std::setw(11) << t.discarded;
    if (!t.ok()) {
      out << "error: " << t.error;
    } else if (t.timed_out > 0) {
      out << "ok (" << t.timed_out << " timed out)";
    } else {
      out << "ok";
    }
    out << '\n';
  }
}

void write_corpus_jsonl(std::ostream& out, const CorpusReport& report) {
  for (const auto& t : report.tasks) {
    nlohmann::json j{{"task", t.id},           {"rank", t.rank},
                     {"hints", t.total_hints}, {"eliminated", t.eliminated},
                     {"discarded", t.discarded}, {"timed_out", t.timed_out}};
    if (!t.ok()) j["error"] = t.error;
    out << j.dump() << '\n';
  }
}

void write_noise(std::ostream& out, const NoiseReport& r, Format format) {
  if (format == Format::Json) {
    out << nlohmann::json{{"pairs", r.pairs}, {"noisy", r.noisy}, {"percentage", r.percentage}}.dump() << '\n';
  } else {
    out << "noise " << fixed(r.percentage, 2) << "% (" << r.noisy << " of " << r.pairs << " pairs)\n";
  }
}

void dump_transformers(std::ostream& out, const PipelineResult& r) {
  for (const auto& s : r.statements) {
    for (const auto& t : s.targets) {
      nlohmann::json j{{"target", t.target.label()},
                       {"outcome", transformer::outcome_name(t.outcome)},
                       {"transformer", to_json(t.f)}};
      if (!t.reason.empty()) j["reason"] = t.reason;
      out << j.dump() << '\n';
    }
  }
}

void dump_datasets(std::ostream& out, const PipelineResult& r) {
  for (const auto& s : r.statements) {
    for (const auto& t : s.targets) {
      if (!t.data) continue;
      out << "# " << t.target.label() << '\n';
      repair::write_csv(out, *t.data, *t.space, t.target);
    }
  }
}

void dump_likelihoods(std::ostream& out, const PipelineResult& r) {
  for (const auto& s : r.statements) {
    for (const auto& t : s.targets) {
      if (!t.data) continue;
      out << "# " << t.target.label() << " m=" << t.max_size << " candidates=" << t.space_size
          << " columns=" << t.columns << '\n';
      std::vector<std::size_t> order(t.likelihoods.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return t.likelihoods[a] > t.likelihoods[b]; });
      for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& e = t.space->candidates[t.data->candidate[order[i]]].expr;
        out << i + 1 << '\t' << fixed(t.likelihoods[order[i]], 4) << '\t' << lang::to_string(*e) << '\n';
      }
    }
  }
}

}  // namespace minthint::driver
