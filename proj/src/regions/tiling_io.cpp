#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "aztec/errors.hpp"
#include "aztec/regions.hpp"

namespace aztec::regions {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_line(std::istream& is, std::string& line, long& lineno) {
  while (std::getline(is, line)) {
    ++lineno;
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return true;
  }
  return false;
}

struct Header {
  bool aztec = false;
  long n = 0;
  long count = 0;
  int parity = 0;
};

Header read_header(std::istream& is, long& lineno) {
  std::string line;
  if (!next_line(is, line, lineno)) throw ParseError("empty input: expected 'aztec n' or 'region count'");
  std::istringstream ss(line);
  std::string word;
  ss >> word;
  Header h;
  if (word == "aztec") {
    h.aztec = true;
    if (!(ss >> h.n) || h.n < 1) throw ParseError("line " + std::to_string(lineno) + ": bad diamond order");
  } else if (word == "region") {
    if (!(ss >> h.count) || h.count < 0) throw ParseError("line " + std::to_string(lineno) + ": bad count");
    long parity = 0;
    if (ss >> parity) h.parity = static_cast<int>(((parity % 2) + 2) % 2);
  } else {
    throw ParseError("line " + std::to_string(lineno) + ": unknown header '" + word + "'");
  }
  return h;
}

}  // namespace

void write_tiling(std::ostream& os, const Tiling& t, const std::string& comment) {
  if (!comment.empty()) os << "# " << comment << '\n';
  const Region& r = t.region();
  if (r.order_hint()) {
    os << "aztec " << *r.order_hint() << '\n';
  } else {
    os << "region " << t.domino_count() << ' ' << r.white_parity() << '\n';
  }
  for (const Domino& d : t.dominos()) {
    const PlacedDomino p = placed(d, r);
    os << p.ell << ' ' << p.m << ' ' << klass_letter(p.klass) << '\n';
  }
}

Tiling read_tiling(std::istream& is) {
  long lineno = 0;
  const Header h = read_header(is, lineno);
  std::vector<PlacedDomino> placed_list;
  std::string line;
  while (next_line(is, line, lineno)) {
    std::istringstream ss(line);
    PlacedDomino p;
    char k = 0;
    if (!(ss >> p.ell >> p.m >> k)) throw ParseError("line " + std::to_string(lineno) + ": expected 'l m K'");
    p.klass = klass_from_letter(k);
    placed_list.push_back(p);
  }
  std::vector<Domino> ds;
  ds.reserve(placed_list.size());
  for (const auto& p : placed_list) ds.push_back(from_placed(p));
  RegionPtr region;
  if (h.aztec) {
    region = std::make_shared<const Region>(Region::aztec_diamond(h.n));
  } else {
    if (static_cast<long>(ds.size()) != h.count) {
      throw ParseError("header announces " + std::to_string(h.count) + " dominos, found " + std::to_string(ds.size()));
    }
    std::vector<Cell> cells;
    for (const auto& d : ds) {
      cells.push_back(d.anchor);
      cells.push_back(d.second());
    }
    region = std::make_shared<const Region>(std::move(cells), h.parity);
  }
  Tiling t(region, ds);
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (classify(ds[k], *region) != placed_list[k].klass) {
      throw IntegrityError("domino at (" + std::to_string(placed_list[k].ell) + "," +
                           std::to_string(placed_list[k].m) + ") is labelled " +
                           klass_letter(placed_list[k].klass) + " but its class is " +
                           klass_letter(classify(ds[k], *region)));
    }
  }
  return t;
}

Tiling read_tiling_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_tiling(in);
}

Region read_region(std::istream& is) {
  long lineno = 0;
  const Header h = read_header(is, lineno);
  if (h.aztec) return Region::aztec_diamond(h.n);
  std::vector<Cell> cells;
  std::string line;
  while (next_line(is, line, lineno)) {
    std::istringstream ss(line);
    Cell c;
    if (!(ss >> c.i >> c.j)) throw ParseError("line " + std::to_string(lineno) + ": expected 'i j'");
    cells.push_back(c);
  }
  if (static_cast<long>(cells.size()) != h.count) {
    throw ParseError("header announces " + std::to_string(h.count) + " cells, found " + std::to_string(cells.size()));
  }
  return Region(std::move(cells), h.parity);
}

Region read_region_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_region(in);
}

}  // namespace aztec::regions
