#include "prismatic/emitters.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "prismatic/morph.hpp"

namespace prismatic {

std::vector<OrbitEntry> enumerate_orbit(const MarkedBox<Rat>& seed, const Rat& a, const Rat& b,
                                        int depth) {
  std::vector<OrbitEntry> out;
  struct Node {
    std::string word;
    MarkedBox<Rat> box;
  };
  std::vector<Node> frontier;
  auto push_entry = [&](const std::string& word, const MarkedBox<Rat>& box) {
    out.push_back({word, box, false, ""});
    frontier.push_back({word, box});
  };
  push_entry("", seed);
  bool morph_trivial = a == Rat(1) && b == Rat(1);
  auto apply = [&](char op, const MarkedBox<Rat>& box) {
    MarkedBox<Rat> image = op == 't' ? box_t(box) : (op == 'b' ? box_b(box) : box_i(box));
    return morph_trivial ? image : morph_box(image, a, b);
  };
  // the i-side seed; i counts toward the depth
  if (depth >= 1) {
    try {
      push_entry("i", apply('i', seed));
    } catch (const std::exception& e) {
      out.push_back({"i", seed, true, e.what()});
    }
  }
  size_t cursor = 0;
  while (cursor < frontier.size()) {
    Node node = frontier[cursor++];
    if (static_cast<int>(node.word.size()) >= depth) continue;
    for (char op : {'b', 't'}) {
      std::string word = std::string(1, op) + node.word;
      try {
        push_entry(word, apply(op, node.box));
      } catch (const std::exception& e) {
        out.push_back({word, node.box, true, e.what()});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const OrbitEntry& x, const OrbitEntry& y) {
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    return x.word < y.word;
  });
  return out;
}

nlohmann::ordered_json box_to_json(const std::string& word, const MarkedBox<Rat>& box) {
  nlohmann::ordered_json j;
  j["word"] = word;
  auto verts = nlohmann::ordered_json::array();
  for (const auto& v : box.v) {
    HVec<Rat> c = canonicalized(v);
    verts.push_back({c.x.str(), c.y.str(), c.z.str()});
  }
  j["vertices"] = verts;
  return j;
}

nlohmann::ordered_json orbit_to_json(const std::vector<OrbitEntry>& entries,
                                     const nlohmann::ordered_json& config) {
  nlohmann::ordered_json j;
  j["config"] = config;
  auto boxes = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    if (e.degenerate) {
      boxes.push_back({{"word", e.word}, {"degenerate", true}, {"note", e.note}});
    } else {
      boxes.push_back(box_to_json(e.word, e.box));
    }
  }
  j["boxes"] = boxes;
  return j;
}

std::string orbit_svg(const std::vector<OrbitEntry>& entries, const std::string& config_comment) {
  // bounding box over all finite affine vertices
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  struct Drawn {
    std::array<std::pair<double, double>, 6> pts;
    size_t depth;
  };
  std::vector<Drawn> drawn;
  for (const auto& e : entries) {
    if (e.degenerate) continue;
    Drawn d;
    bool finite = true;
    for (size_t i = 0; i < 6; ++i) {
      if (e.box.v[i].z.is_zero()) { finite = false; break; }
      auto [x, y] = affine_point(e.box.v[i]);
      d.pts[i] = {x.to_double(), y.to_double()};
      if (!std::isfinite(d.pts[i].first) || !std::isfinite(d.pts[i].second)) finite = false;
    }
    if (!finite) continue;
    d.depth = e.word.size();
    for (const auto& [x, y] : d.pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
    drawn.push_back(d);
  }
  if (drawn.empty()) { xmin = ymin = 0; xmax = ymax = 1; }
  double span = std::max(xmax - xmin, ymax - ymin);
  if (span <= 0) span = 1;
  double margin = 0.05 * span;
  double scale = 720.0 / (span + 2 * margin);
  auto sx = [&](double x) { return (x - xmin + margin) * scale; };
  auto sy = [&](double y) { return 720.0 - (y - ymin + margin) * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- " << config_comment << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"720\" "
        "viewBox=\"0 0 720 720\">\n";
  os << "<rect width=\"720\" height=\"720\" fill=\"white\"/>\n";
  for (const auto& d : drawn) {
    // quad through slots 0,2,3,5
    os << "<polygon points=\"";
    for (size_t i : {size_t{0}, size_t{2}, size_t{3}, size_t{5}})
      os << sx(d.pts[i].first) << "," << sy(d.pts[i].second) << " ";
    int shade = static_cast<int>(std::min<size_t>(d.depth, 8));
    os << "\" fill=\"none\" stroke=\"hsl(" << 210 + 15 * shade
       << ",70%,40%)\" stroke-width=\"1\"/>\n";
    os << "<circle cx=\"" << sx(d.pts[1].first) << "\" cy=\"" << sy(d.pts[1].second)
       << "\" r=\"2.5\" fill=\"crimson\"/>\n";
    os << "<circle cx=\"" << sx(d.pts[4].first) << "\" cy=\"" << sy(d.pts[4].second)
       << "\" r=\"2.5\" fill=\"darkgreen\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

nlohmann::ordered_json certificate_report_json(const CertificateReport& report,
                                               const nlohmann::ordered_json& config) {
  nlohmann::ordered_json j;
  j["config"] = config;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    arr.push_back({{"name", r.name},
                   {"status", r.pass ? "PASS" : "FAIL"},
                   {"detail", r.detail},
                   {"millis", r.millis}});
  }
  j["certificates"] = arr;
  j["all_pass"] = report.all_pass();
  return j;
}

std::string orbit_csv(const OrbitResult& orbit, const std::string& config_comment, int digits) {
  std::ostringstream os;
  os << "# " << config_comment << "\n";
  os << "step,r,s,t,residual\n";
  for (const auto& row : orbit.rows) {
    os << row.step << "," << row.r.str(digits) << "," << row.s.str(digits) << ","
       << row.t.str(digits) << "," << row.residual.str(8) << "\n";
  }
  return os.str();
}

std::string trace_jsonl(const OrbitResult& orbit, int digits) {
  std::ostringstream os;
  auto point = [&](const DynPoint& p) {
    return nlohmann::ordered_json{
        {"r", p.r.str(digits)}, {"s", p.s.str(digits)}, {"t", p.t.str(digits)}};
  };
  long step = 1;
  for (const auto& tr : orbit.traces) {
    nlohmann::ordered_json j;
    j["step"] = step++;
    j["input"] = point(tr.input);
    j["sheared"] = point(tr.sheared);
    j["lambda"] = tr.lambda_sheared.str(digits);
    j["chi"] = tr.chi.str(digits);
    j["chi_source"] = tr.chi_source.str(digits);
    j["tau_raw"] = tr.tau_raw.str(digits);
    j["tau_canonical"] = tr.tau_canonical.str(digits);
    j["omega"] = tr.omega.str(digits);
    j["t_prime"] = tr.t_prime.str(digits);
    j["ratio"] = tr.ratio.str(digits);
    j["ratio_preserve"] = tr.ratio_preserve.str(digits);
    j["s_root"] = tr.s_root.str(digits);
    j["s_residual"] = tr.s_residual.str(8);
    j["positive_roots"] = tr.positive_roots;
    j["redescribed"] = point(tr.redescribed);
    j["output"] = point(tr.output);
    j["residual_in"] = tr.residual_in.str(8);
    j["residual_out"] = tr.residual_out.str(8);
    os << j.dump() << "\n";
  }
  return os.str();
}

}  // namespace prismatic
