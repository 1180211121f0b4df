#include "zetagaps/zero_checkpoint.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

#include "zetagaps/errors.hpp"
#include "zetagaps/format.hpp"
#include "zetagaps/parallel.hpp"

namespace zetagaps {

namespace {

std::string header_line(double t_min, double t_max, const ScanOptions& options) {
  return "# zeta_gaps scan checkpoint from=" + format_double(t_min) + " to=" + format_double(t_max) +
         " grid=" + format_double(options.grid_factor) + " tol=" + format_double(options.refine_tolerance);
}

constexpr std::string_view kColumns = "record,index,a,b";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double field_double(const std::string& text) {
  auto v = parse_double(text);
  if (!v) throw DomainError("malformed number in checkpoint: '" + text + "'");
  return *v;
}

}  // namespace

void write_checkpoint_header(std::ostream& out, double t_min, double t_max, const ScanOptions& options) {
  out << header_line(t_min, t_max, options) << '\n' << kColumns << '\n';
}

void write_checkpoint_segment(std::ostream& out, const ScanSegment& segment, const SegmentResult& result) {
  const std::string idx = std::to_string(segment.index);
  for (double t : result.zeros) out << "zero," << idx << ',' << format_double(t) << ",\n";
  for (const Interval& s : result.suspects) {
    out << "suspect," << idx << ',' << format_double(s.lo) << ',' << format_double(s.hi) << '\n';
  }
  out << "segment," << idx << ',' << format_double(segment.lo) << ',' << format_double(segment.hi) << '\n';
  out.flush();
}

std::vector<SegmentResult> read_checkpoint(std::istream& in, double t_min, double t_max,
                                           const ScanOptions& options) {
  std::string line;
  if (!std::getline(in, line)) return {};
  if (line != header_line(t_min, t_max, options)) {
    throw DomainError("checkpoint was written for a different scan: " + line);
  }
  if (!std::getline(in, line) || line != kColumns) throw DomainError("checkpoint is missing its column header");

  const std::vector<ScanSegment> plan = plan_segments(t_min, t_max);
  std::map<std::size_t, SegmentResult> pending;
  std::vector<SegmentResult> committed;
  while (std::getline(in, line)) {
    // A final line without its newline was cut off by an interrupted write.
    if (in.eof()) break;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 4) throw DomainError("malformed checkpoint row: " + line);
    std::size_t index = 0;
    try {
      index = std::stoul(fields[1]);
    } catch (const std::exception&) {
      throw DomainError("malformed segment index in checkpoint: " + line);
    }
    if (index >= plan.size()) throw DomainError("checkpoint segment index out of range: " + line);
    SegmentResult& seg = pending[index];
    seg.index = index;
    if (fields[0] == "zero") {
      seg.zeros.push_back(field_double(fields[2]));
    } else if (fields[0] == "suspect") {
      seg.suspects.push_back({field_double(fields[2]), field_double(fields[3])});
    } else if (fields[0] == "segment") {
      if (field_double(fields[2]) != plan[index].lo || field_double(fields[3]) != plan[index].hi) {
        throw DomainError("checkpoint segment bounds disagree with the scan plan: " + line);
      }
      committed.push_back(std::move(seg));
      pending.erase(index);
    } else {
      throw DomainError("unknown checkpoint record: " + line);
    }
  }
  return committed;
}

ZeroScan find_zeros_resumable(double t_min, double t_max, const ScanOptions& options,
                              const std::filesystem::path& path) {
  const std::vector<ScanSegment> plan = plan_segments(t_min, t_max);
  std::vector<SegmentResult> done;
  if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0) {
    std::ifstream in(path);
    done = read_checkpoint(in, t_min, t_max, options);
  }

  // Rewrite only the committed prefix so an interrupted tail never mixes
  // with new rows.
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open checkpoint file " + path.string());
  write_checkpoint_header(out, t_min, t_max, options);
  std::vector<bool> have(plan.size(), false);
  for (const SegmentResult& s : done) {
    write_checkpoint_segment(out, plan[s.index], s);
    have[s.index] = true;
  }
  std::vector<ScanSegment> todo;
  for (const ScanSegment& s : plan) {
    if (!have[s.index]) todo.push_back(s);
  }

  std::mutex write_mutex;
  std::vector<SegmentResult> fresh_results(todo.size());
  parallel_for(todo.size(), options.threads, [&](std::size_t i) {
    SegmentResult r = scan_segment(todo[i], options);
    std::lock_guard lock(write_mutex);
    write_checkpoint_segment(out, todo[i], r);
    fresh_results[i] = std::move(r);
  });

  for (SegmentResult& r : fresh_results) done.push_back(std::move(r));
  return assemble_scan(t_min, t_max, options, std::move(done));
}

}  // namespace zetagaps
