#include "trustproc/iri.hpp"

#include <cctype>

namespace trustproc {
namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool scheme_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-' || c == '.';
}

}  // namespace

Iri::Iri(std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (begin < end && is_ws(raw[begin])) ++begin;
  while (end > begin && is_ws(raw[end - 1])) --end;
  if (begin == end) throw InvalidIri("empty IRI", 0);

  std::string v(raw.substr(begin, end - begin));
  for (std::size_t i = 0; i < v.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(v[i]);
    if (is_ws(v[i]) || c < 0x20)
      throw InvalidIri("whitespace or control character in IRI", begin + i);
    if (v[i] == '<' || v[i] == '>')
      throw InvalidIri("angle bracket in IRI", begin + i);
  }

  std::size_t colon = v.find(':');
  if (colon == std::string::npos)
    throw InvalidIri("missing scheme separator ':'", begin + v.size());
  if (colon == 0) throw InvalidIri("empty scheme", begin);
  if (!scheme_start(v[0])) throw InvalidIri("scheme must start with a letter", begin);
  for (std::size_t i = 1; i < colon; ++i) {
    if (!scheme_char(v[i])) throw InvalidIri("invalid scheme character", begin + i);
    v[i] = lower(v[i]);
  }
  v[0] = lower(v[0]);

  // Lowercase the host inside an authority component, if present.
  if (v.compare(colon + 1, 2, "//") == 0) {
    std::size_t auth_begin = colon + 3;
    std::size_t auth_end = v.find_first_of("/?#", auth_begin);
    if (auth_end == std::string::npos) auth_end = v.size();
    std::size_t host_begin = auth_begin;
    std::size_t at = v.rfind('@', auth_end == 0 ? 0 : auth_end - 1);
    if (at != std::string::npos && at >= auth_begin && at < auth_end) host_begin = at + 1;
    std::size_t host_end = auth_end;
    if (host_begin < auth_end && v[host_begin] == '[') {
      std::size_t close = v.find(']', host_begin);
      host_end = (close != std::string::npos && close < auth_end) ? close + 1 : auth_end;
    } else {
      std::size_t port = v.rfind(':', auth_end == 0 ? 0 : auth_end - 1);
      if (port != std::string::npos && port >= host_begin && port < auth_end) host_end = port;
    }
    for (std::size_t i = host_begin; i < host_end; ++i) v[i] = lower(v[i]);
  }

  value_ = std::move(v);
}

Iri canonicalize_iri(std::string_view raw) { return Iri(raw); }

}  // namespace trustproc
