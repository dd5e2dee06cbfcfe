#pragma once

#include "veer/track/train_track.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace veer::track {

/// Contents of a track file. `measure` is present iff the file has weights;
/// `field` is Q unless a field line was given.
struct TrackFile {
  TrainTrack track;
  algebra::FieldPtr field;
  std::optional<Measure> measure;
  /// Declared (genus, punctures) from a `surface g n` header; nullopt for `auto`.
  std::optional<std::pair<int, int>> surface;
};

/// Parses the line-oriented track format (see docs/formats.md). Throws
/// ParseError with the offending line number. Semantic validity is not
/// checked here beyond what the grammar needs.
TrackFile parse_track(std::istream& in);
TrackFile parse_track_string(const std::string& text);
TrackFile read_track_file(const std::string& path);

/// Canonical text; parse_track(write_track(x)) reproduces x and
/// write_track(parse_track(s)) == s for any s produced here.
std::string write_track(const TrackFile& file);
std::string write_track(const TrainTrack& t, const std::optional<Measure>& mu = std::nullopt);

}  // namespace veer::track
