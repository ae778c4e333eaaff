#include "sigmalab/spectral/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "sigmalab/errors.hpp"

namespace sigmalab::spectral {

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

template <typename T>
void put(std::ostream& os, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  os.write(buf, sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  char buf[sizeof(T)];
  if (!is.read(buf, sizeof(T))) throw Error("snapshot: truncated input");
  T v;
  std::memcpy(&v, buf, sizeof(T));
  return v;
}

}  // namespace

void write_snapshot(std::ostream& os, const SpectralField& field) {
  const auto& g = field.grid();
  put<std::int32_t>(os, g.dim());
  put<std::int32_t>(os, g.points_per_axis());
  put<double>(os, g.half_length());
  for (double v : field.to_real()) put<double>(os, v);
}

SpectralField read_snapshot(std::istream& is) {
  const auto n = get<std::int32_t>(is);
  const auto N = get<std::int32_t>(is);
  const auto L = get<double>(is);
  auto grid = make_grid(n, N, L);
  std::vector<double> vals(grid->size());
  for (auto& v : vals) v = get<double>(is);
  return SpectralField::from_real(grid, vals);
}

void write_snapshot(const std::string& path, const SpectralField& field) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path);
  write_snapshot(os, field);
}

SpectralField read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path);
  return read_snapshot(is);
}

void write_slice_csv(std::ostream& os, const SpectralField& field) {
  const auto& g = field.grid();
  const auto vals = field.to_real();
  const std::size_t N = static_cast<std::size_t>(g.points_per_axis());
  // The origin of the trailing axes sits at index N/2.
  std::size_t offset = 0;
  std::size_t stride = 1;
  for (int d = g.dim() - 1; d >= 1; --d) {
    offset += (N / 2) * stride;
    stride *= N;
  }
  os << "x,value\r\n";
  os.precision(17);
  for (std::size_t i = 0; i < N; ++i) {
    os << g.coordinate(static_cast<int>(i)) << ',' << vals[offset + i * stride] << "\r\n";
  }
}

}  // namespace sigmalab::spectral
