#pragma once

#include <iosfwd>
#include <string>

#include "sigmalab/spectral/field.hpp"

namespace sigmalab::spectral {

/// Binary snapshot: int32 n, int32 N, float64 L, then N^n little-endian
/// float64 real-space values (row-major, last axis fastest).
void write_snapshot(std::ostream& os, const SpectralField& field);
SpectralField read_snapshot(std::istream& is);

void write_snapshot(const std::string& path, const SpectralField& field);
SpectralField read_snapshot(const std::string& path);

/// CSV (x,value) along the first axis through the origin of the others.
void write_slice_csv(std::ostream& os, const SpectralField& field);

}  // namespace sigmalab::spectral
