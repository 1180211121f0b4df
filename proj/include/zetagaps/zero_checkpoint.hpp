#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "zetagaps/hardy_z.hpp"

namespace zetagaps {

/// Plain CSV log of completed scan segments:
///
///   # zeta_gaps scan checkpoint from=<t_min> to=<t_max> grid=<g> tol=<tol>
///   record,index,a,b
///   zero,<segment>,<t>,
///   suspect,<segment>,<lo>,<hi>
///   segment,<segment>,<lo>,<hi>
///
/// A segment's zero and suspect rows precede its `segment` row, which
/// commits it. Rows of an uncommitted trailing segment are ignored on load.
void write_checkpoint_header(std::ostream& out, double t_min, double t_max, const ScanOptions& options);

void write_checkpoint_segment(std::ostream& out, const ScanSegment& segment, const SegmentResult& result);

/// Committed segments from a checkpoint. Throws DomainError when the header
/// was written for a different range, grid, or tolerance.
std::vector<SegmentResult> read_checkpoint(std::istream& in, double t_min, double t_max,
                                           const ScanOptions& options);

/// find_zeros that records progress in `path` and skips segments already
/// committed there. Produces the same table as an uninterrupted scan.
ZeroScan find_zeros_resumable(double t_min, double t_max, const ScanOptions& options,
                              const std::filesystem::path& path);

}  // namespace zetagaps
