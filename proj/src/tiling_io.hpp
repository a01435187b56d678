#pragma once
// File formats: JSON schemas for the three object kinds, JSONL sample
// batches with a metadata header line, SVG and ASCII renderings.
//
//   tiling:    {"a":..,"b":..,"c":..,"verticals":[[..],..]}   lines k=0..a+c
//   partition: {"a":..,"b":..,"c":..,"parts":[[..],..]}
//   pattern:   {"a":..,"b":..,"c":..,"rows":[[..],..]}
//
// Writers emit byte-stable output for identical inputs.

#include <iosfwd>
#include <string>

#include "lozenges.hpp"
#include "sampler.hpp"

namespace hextile {

std::string tiling_to_json(const LozengeTiling& t);
std::string partition_to_json(const PlanePartition& p);
std::string pattern_to_json(const GelfandPattern& g, const HexDims& d);

enum class ObjectKind { Tiling, Partition, Pattern };
ObjectKind detect_kind(const std::string& json_text);
LozengeTiling tiling_from_json(const std::string& json_text);  // converts any kind

void write_batch_jsonl(std::ostream& os, const SampleBatch& batch);
SampleBatch read_batch_jsonl(std::istream& is);

// Figure-style SVG: three fixed fills, one per orientation.  When `arctic`
// is non-null (one flag per lozenges_of(t) entry) frozen lozenges keep their
// fill, the mixed core is dimmed, and the inscribed ellipse is overlaid.
std::string tiling_to_svg(const LozengeTiling& t, const std::vector<char>* arctic = nullptr);

// One character per triangle between consecutive lines: '|' vertical,
// '\' left-leaning, '/' right-leaning.
std::string tiling_to_ascii(const LozengeTiling& t);

std::string density_to_csv(const DensityGrid& g);

}  // namespace hextile
