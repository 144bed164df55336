#include "hyll/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyll/errors.hpp"

namespace hyll {

namespace {

std::vector<std::string> split_header(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ';') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  for (std::string& f : fields) {
    while (!f.empty() && f.front() == ' ') f.erase(f.begin());
    while (!f.empty() && f.back() == ' ') f.pop_back();
  }
  return fields;
}

CheckpointHeader parse_header(const std::string& line, const std::string& path) {
  const std::vector<std::string> fields = split_header(line);
  if (fields.size() != 7 || fields[0] != "HYLL v1")
    throw CheckpointError("checkpoint: bad header in '" + path + "'");
  CheckpointHeader h;
  h.omega = std::stoi(fields[1]);
  h.k = rational_from_string(fields[2]);
  h.Z = rational_from_string(fields[3]);
  h.digits = std::stoi(fields[4]);
  h.n = static_cast<std::size_t>(std::stoull(fields[5]));
  h.fingerprint = fields[6];
  if (h.fingerprint.size() != 16 ||
      h.fingerprint.find_first_not_of("0123456789abcdef") != std::string::npos)
    throw CheckpointError("checkpoint: malformed fingerprint in '" + path + "'");
  return h;
}

}  // namespace

std::string checkpoint_path(const std::string& dir, int omega) {
  return dir + "/pencil_w" + std::to_string(omega) + ".chk";
}

void checkpoint_write(const Pencil& pencil, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string path = checkpoint_path(dir, pencil.meta.omega);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw CheckpointError("checkpoint_write: cannot open '" + tmp + "'");
    out << "HYLL v1; " << pencil.meta.omega << "; " << rational_to_string(pencil.meta.k) << "; "
        << rational_to_string(pencil.meta.Z) << "; " << pencil.meta.digits << "; " << pencil.n
        << "; " << pencil.meta.fingerprint << "\n";
    for (std::size_t i = 0; i < pencil.n; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        out << i << " " << j << " " << pencil.S.lower(i, j).roundtrip_string() << " "
            << pencil.H.lower(i, j).roundtrip_string() << "\n";
    if (!out) throw CheckpointError("checkpoint_write: write failed for '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

Pencil checkpoint_read(const std::string& dir, int omega) {
  const std::string path = checkpoint_path(dir, omega);
  std::ifstream in(path);
  if (!in) throw CheckpointError("checkpoint_read: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw CheckpointError("checkpoint_read: empty file '" + path + "'");
  const CheckpointHeader h = parse_header(line, path);
  if (h.omega != omega)
    throw CheckpointError("checkpoint_read: file '" + path + "' holds omega " +
                          std::to_string(h.omega));

  const mpfr_prec_t prec = bits_for_digits(h.digits);
  Pencil p;
  p.n = h.n;
  p.S = PackedSymmetric(h.n);
  p.H = PackedSymmetric(h.n);
  p.meta = PencilMeta{h.omega, h.k, h.Z, h.digits, h.fingerprint};

  std::size_t expected = 0;
  const std::size_t total = h.n * (h.n + 1) / 2;
  std::size_t i = 0, j = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::size_t ri = 0, rj = 0;
    std::string s_text, h_text;
    if (!(is >> ri >> rj >> s_text >> h_text))
      throw CheckpointError("checkpoint_read: malformed entry line in '" + path + "'");
    if (ri != i || rj != j)
      throw CheckpointError("checkpoint_read: entries out of order in '" + path + "'");
    p.S.lower(i, j) = Real::from_string(s_text, prec);
    p.H.lower(i, j) = Real::from_string(h_text, prec);
    ++expected;
    if (j == i) {
      ++i;
      j = 0;
    } else {
      ++j;
    }
  }
  if (expected != total)
    throw CheckpointError("checkpoint_read: '" + path + "' holds " + std::to_string(expected) +
                          " entries, expected " + std::to_string(total));
  return p;
}

std::optional<CheckpointHeader> checkpoint_peek(const std::string& dir, int omega) {
  const std::string path = checkpoint_path(dir, omega);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  return parse_header(line, path);
}

}  // namespace hyll
