#include "srkit/src_io.hpp"

#include <fstream>
#include <sstream>

namespace srk {

namespace {

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::string next(const char* what) {
    std::string line;
    if (!std::getline(in_, line)) err(std::string("unexpected end of file, expected ") + what);
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  [[noreturn]] void err(const std::string& msg) const {
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no_) + ": " + msg);
  }

  std::size_t line_no() const { return line_no_; }
  bool at_end() {
    in_.peek();
    return in_.eof();
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::string keyword_value(Reader& r, const std::string& line, const std::string& key) {
  if (line.rfind(key + " ", 0) != 0) r.err("expected '" + key + "'");
  return line.substr(key.size() + 1);
}

std::size_t to_size(Reader& r, const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    r.err(std::string("bad ") + what);
  }
  if (pos != s.size() || s.empty() || s[0] == '-' || s[0] == '+') r.err(std::string("bad ") + what);
  return static_cast<std::size_t>(v);
}

}  // namespace

LinearCode parse_src(std::istream& in) {
  Reader r(in);
  if (r.next("header") != "srcv1") r.err("expected 'srcv1'");

  std::string fl = keyword_value(r, r.next("field"), "field");
  FieldPtr f;
  {
    std::istringstream fs(fl);
    std::string ps, ks, mod;
    if (!(fs >> ps >> ks >> mod) || !(fs >> std::ws).eof() || mod.rfind("mod=", 0) != 0)
      r.err("field line must read 'field p k mod=...'");
    try {
      f = Field::parse("q=" + ps + "^" + ks + ";" + mod);
    } catch (const Error& e) {
      r.err(e.what());
    }
  }

  std::vector<Block> raw;
  try {
    raw = Profile::parse_blocks(keyword_value(r, r.next("profile"), "profile"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError && e.code() != ErrorCode::BadBlock) throw;
    r.err(e.what());
  }
  const std::size_t k = to_size(r, keyword_value(r, r.next("dim"), "dim"), "dimension");

  std::vector<std::vector<Mat>> gens;
  for (std::size_t g = 0; g < k; ++g) {
    if (!r.next("blank line").empty()) r.err("expected a blank line before each generator");
    if (r.next("generator") != "gen " + std::to_string(g + 1)) r.err("expected 'gen " + std::to_string(g + 1) + "'");
    std::vector<Mat> blocks;
    for (const Block& b : raw) {
      std::string line = r.next("block");
      try {
        blocks.push_back(Mat::parse(f, line, b.n, b.m));
      } catch (const Error& e) {
        r.err(e.what());
      }
    }
    gens.push_back(std::move(blocks));
  }
  while (!r.at_end()) {
    if (!r.next("end").empty()) r.err("trailing content");
  }
  try {
    return code_from_blocks(f, raw, gens);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BadBlock) throw;
    r.err(e.what());
  }
}

LinearCode parse_src_text(const std::string& text) {
  std::istringstream in(text);
  return parse_src(in);
}

LinearCode read_src_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return parse_src(in);
}

std::string write_src(const LinearCode& c) {
  const Profile& p = *c.profile();
  const Field& f = *p.field();
  std::ostringstream out;
  out << "srcv1\n";
  out << "field " << f.p() << ' ' << f.k() << " mod=" << f.modulus_text() << '\n';
  std::vector<Block> raw = p.original_blocks();
  out << "profile ";
  for (std::size_t i = 0; i < raw.size(); ++i) out << (i ? "," : "") << raw[i].n << 'x' << raw[i].m;
  out << '\n';
  out << "dim " << c.dim() << '\n';
  // normalized index of each raw block
  std::vector<std::size_t> where(p.t());
  for (std::size_t i = 0; i < p.t(); ++i) where[p.permutation()[i]] = i;
  for (std::size_t g = 0; g < c.dim(); ++g) {
    MatrixTuple x = c.basis_element(g);
    out << "\ngen " << g + 1 << '\n';
    for (std::size_t r = 0; r < raw.size(); ++r) out << x.block(where[r]).to_text() << '\n';
  }
  return out.str();
}

void write_src_file(const LinearCode& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << write_src(c);
}

}  // namespace srk
