// Copyright 2026 The teleop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "teleop/channel.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "teleop/bellkit.hpp"
#include "teleop/errors.hpp"
#include "teleop/random.hpp"

namespace teleop {

Channel::Channel(StateVector state, std::string name, double norm_tol)
    : state_(std::move(state)), name_(std::move(name)) {
  if (state_.labels() != kChannelLabels) {
    throw std::invalid_argument("Channel: state must be over labels (3,4,5,6)");
  }
  if (!state_.is_normalized(norm_tol)) {
    std::ostringstream msg;
    msg << "Channel: squared norm " << state_.norm() * state_.norm() << " is not 1";
    throw NormalizationError(msg.str());
  }
}

Channel Channel::from_amplitudes(std::vector<Complex> amps, std::string name, double norm_tol) {
  if (amps.size() != 16) {
    throw std::invalid_argument("Channel: expected 16 amplitudes");
  }
  return Channel(StateVector(kChannelLabels, std::move(amps)), std::move(name), norm_tol);
}

Channel Channel::with_receiver_operator(const Matrix& op, std::string name) const {
  if (op.rows() != 4 || op.cols() != 4) {
    throw std::invalid_argument("with_receiver_operator: expected a 4x4 operator");
  }
  std::vector<Complex> amps(16);
  for (std::size_t alice = 0; alice < 4; ++alice) {
    for (std::size_t r = 0; r < 4; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < 4; ++c) {
        acc += op(r, c) * state_[alice * 4 + c];
      }
      amps[alice * 4 + r] = acc;
    }
  }
  return Channel(StateVector(kChannelLabels, std::move(amps)), std::move(name), tol::kUserNorm);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

constexpr std::array<CatalogEntry, 6> kEntries{{
    {"yeo-chua", "yeo-chua",
     "genuine four-qubit state of Yeo and Chua, not reducible to Bell pairs; perfect"},
    {"ghz4", "ghz4", "four-qubit GHZ state (|0000>+|1111>)/sqrt2; impossible"},
    {"w4", "w4", "four-qubit W state (|0001>+|0010>+|0100>+|1000>)/2; impossible"},
    {"cnot-channel", "cnot-channel",
     "(|0000>+|0101>+|1011>+|1110>)/2, receiver correction is a CNOT; perfect"},
    {"bell-pairs", "bell-pairs:i=1,j=1", "Bell pair i on (3,5) times Bell pair j on (4,6); perfect"},
    {"partial-pair", "partial-pair:theta=0.5235987755982988",
     "(cos t|00>+sin t|11>) on (3,5) times a Bell pair on (4,6); probabilistic unless t = pi/4"},
}};

double parse_real(std::string_view token, std::string_view what) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError("cannot parse " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<Complex> bitstring_amplitudes(std::initializer_list<std::pair<unsigned, double>> terms, double scale) {
  std::vector<Complex> amps(16);
  for (const auto& [bits, sign] : terms) amps[bits] = sign * scale;
  return amps;
}

}  // namespace

CatalogName CatalogName::parse(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  const std::string_view family = text.substr(0, colon);
  const std::string_view params = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  CatalogName out;
  if (family == "yeo-chua") {
    out.kind = Kind::YeoChua;
  } else if (family == "ghz4") {
    out.kind = Kind::Ghz4;
  } else if (family == "w4") {
    out.kind = Kind::W4;
  } else if (family == "cnot-channel") {
    out.kind = Kind::CnotChannel;
  } else if (family == "bell-pairs") {
    out.kind = Kind::BellPairs;
  } else if (family == "partial-pair") {
    out.kind = Kind::PartialPair;
  } else {
    throw UnknownName("unknown channel '" + std::string(family) + "'");
  }

  bool have_theta = false;
  std::string_view rest = params;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw BadParameter("malformed parameter '" + std::string(item) + "'");
    }
    const std::string_view key = trim(item.substr(0, eq));
    const std::string_view value = trim(item.substr(eq + 1));
    double parsed = 0.0;
    try {
      parsed = parse_real(value, key);
    } catch (const ParseError& e) {
      throw BadParameter(e.what());
    }
    if (out.kind == Kind::BellPairs && (key == "i" || key == "j")) {
      if (parsed != std::floor(parsed) || parsed < 1 || parsed > 4) {
        throw BadParameter("bell-pairs index must be an integer in 1..4");
      }
      (key == "i" ? out.i : out.j) = static_cast<int>(parsed);
    } else if (out.kind == Kind::PartialPair && key == "theta") {
      if (!(parsed > 0.0 && parsed < std::numbers::pi / 2)) {
        throw BadParameter("partial-pair theta must lie in (0, pi/2)");
      }
      out.theta = parsed;
      have_theta = true;
    } else {
      throw BadParameter("unexpected parameter '" + std::string(key) + "' for " + std::string(family));
    }
  }
  if (out.kind == Kind::PartialPair && !have_theta) {
    throw BadParameter("partial-pair requires theta");
  }
  return out;
}

std::string CatalogName::to_string() const {
  switch (kind) {
    case Kind::YeoChua:
      return "yeo-chua";
    case Kind::Ghz4:
      return "ghz4";
    case Kind::W4:
      return "w4";
    case Kind::CnotChannel:
      return "cnot-channel";
    case Kind::BellPairs:
      return "bell-pairs:i=" + std::to_string(i) + ",j=" + std::to_string(j);
    case Kind::PartialPair:
      return "partial-pair:theta=" + format_real(theta);
  }
  return {};
}

std::span<const CatalogEntry> catalog_entries() { return kEntries; }

Channel catalog(const CatalogName& name) {
  // sqrt(0.5) is correctly rounded; 1/sqrt(2.0) lands one ulp low.
  const double h = std::sqrt(0.5);
  std::vector<Complex> amps;
  switch (name.kind) {
    case CatalogName::Kind::YeoChua:
      amps = bitstring_amplitudes({{0b0000, 1},
                                   {0b0011, -1},
                                   {0b0101, -1},
                                   {0b0110, 1},
                                   {0b1001, 1},
                                   {0b1010, 1},
                                   {0b1100, 1},
                                   {0b1111, 1}},
                                  0.5 * h);
      break;
    case CatalogName::Kind::Ghz4:
      amps = bitstring_amplitudes({{0b0000, 1}, {0b1111, 1}}, h);
      break;
    case CatalogName::Kind::W4:
      amps = bitstring_amplitudes({{0b0001, 1}, {0b0010, 1}, {0b0100, 1}, {0b1000, 1}}, 0.5);
      break;
    case CatalogName::Kind::CnotChannel:
      amps = bitstring_amplitudes({{0b0000, 1}, {0b0101, 1}, {0b1011, 1}, {0b1110, 1}}, 0.5);
      break;
    case CatalogName::Kind::BellPairs: {
      const StateVector s = kron(bell_state(BellIndex(name.i), 3, 5), bell_state(BellIndex(name.j), 4, 6));
      return Channel(s.reordered(kChannelLabels), name.to_string());
    }
    case CatalogName::Kind::PartialPair: {
      const StateVector first({3, 5}, {std::cos(name.theta), 0.0, 0.0, std::sin(name.theta)});
      const StateVector s = kron(first, bell_state(BellIndex(1), 4, 6));
      return Channel(s.reordered(kChannelLabels), name.to_string());
    }
  }
  return Channel::from_amplitudes(std::move(amps), name.to_string());
}

Channel catalog(std::string_view text) { return catalog(CatalogName::parse(text)); }

// ---------------------------------------------------------------------------
// File format

Channel parse_channel(std::string_view text, bool normalize, std::string name) {
  std::vector<Complex> amps(16);
  std::array<bool, 16> seen{};
  int count = 0;
  int line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      const auto end = line.find_first_of(" \t");
      tokens.push_back(line.substr(0, end));
      line = end == std::string_view::npos ? std::string_view{} : trim(line.substr(end));
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tokens.size() != 3) {
      throw ParseError(where + "expected 'BBBB RE IM'");
    }
    const std::string_view bits = tokens[0];
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError(where + "basis label must be four binary digits");
    }
    const unsigned index = std::stoul(std::string(bits), nullptr, 2);
    if (seen[index]) {
      throw ParseError(where + "duplicate basis label " + std::string(bits));
    }
    seen[index] = true;
    try {
      amps[index] = Complex(parse_real(tokens[1], "real part"), parse_real(tokens[2], "imaginary part"));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
    ++count;
  }
  if (count != 16) {
    throw ParseError("expected 16 basis lines, found " + std::to_string(count));
  }

  const double len = norm(amps);
  if (normalize) {
    if (len == 0.0) {
      throw NormalizationError("channel file has all-zero amplitudes");
    }
    for (Complex& z : amps) z /= len;
  }
  return Channel::from_amplitudes(std::move(amps), std::move(name), normalize ? tol::kNormalized : tol::kUserNorm);
}

std::string serialize_channel(const Channel& c) {
  std::ostringstream out;
  out << "# teleop channel: amplitudes over qubits (3,4,5,6)\n";
  if (!c.name().empty()) {
    out << "# name: " << c.name() << "\n";
  }
  for (unsigned k = 0; k < 16; ++k) {
    for (int b = 3; b >= 0; --b) out << ((k >> b) & 1u);
    const Complex z = c.amplitudes()[k];
    out << ' ' << format_real(z.real()) << ' ' << format_real(z.imag()) << '\n';
  }
  return out.str();
}

Channel random_channel(std::uint64_t seed) {
  return Channel::from_amplitudes(random_unit_vector(seed, 16), "random:" + std::to_string(seed));
}

}  // namespace teleop
