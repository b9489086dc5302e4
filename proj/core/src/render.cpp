#include "homcalc/render.hpp"

#include <sstream>

#include "json.hpp"

namespace homcalc {

namespace {

using json = nlohmann::ordered_json;

const char* kind_name(WindowKind k) {
    switch (k) {
        case WindowKind::tor: return "tor";
        case WindowKind::ext: return "ext";
        case WindowKind::stable_tor: return "stable-tor";
        case WindowKind::stable_ext: return "stable-ext";
    }
    return "?";
}

json length_json(bool zero, bool finite, std::int64_t length) {
    if (zero) return 0;
    if (!finite) return "inf";
    return length;
}

std::string length_text(bool zero, bool finite, std::int64_t length) {
    if (zero) return "0";
    if (!finite) return "inf";
    return std::to_string(length);
}

}  // namespace

std::string render_betti(const BettiTable& b, bool as_json) {
    if (as_json) {
        json out = json::array();
        for (std::size_t i = 0; i < b.values.size(); ++i)
            out.push_back({{"index", i}, {"rank", b.values[i]}});
        return out.dump() + "\n";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < b.values.size(); ++i) out << i << "\t" << b.values[i] << "\n";
    return out.str();
}

std::string render_window(const VanishingWindow& w, bool as_json) {
    if (as_json) {
        json out = json::array();
        for (const auto& e : w.entries)
            out.push_back({{"index", e.index},
                           {"zero", e.zero},
                           {"length", length_json(e.zero, e.finite, e.length)}});
        return out.dump() + "\n";
    }
    std::ostringstream out;
    for (const auto& e : w.entries)
        out << e.index << "\t" << (e.zero ? "yes" : "no") << "\t"
            << length_text(e.zero, e.finite, e.length) << "\n";
    return out.str();
}

namespace {

json report_json(const TheoremReport& r) {
    return json{{"theorem", r.theorem},
                {"verdict", verdict_name(r.verdict)},
                {"hypothesis_indices", r.hypothesis_indices},
                {"conclusion_indices", r.conclusion_indices},
                {"skipped", r.skipped},
                {"witnesses", r.violation_indices},
                {"note", r.note}};
}

std::string report_text(const TheoremReport& r) {
    std::ostringstream out;
    out << "theorem\t" << r.theorem << "\n";
    out << "verdict\t" << verdict_name(r.verdict) << "\n";
    auto list = [&](const char* label, const std::vector<int>& v) {
        out << label;
        for (int i : v) out << "\t" << i;
        out << "\n";
    };
    list("hypothesis", r.hypothesis_indices);
    list("conclusion", r.conclusion_indices);
    list("skipped", r.skipped);
    list("witnesses", r.violation_indices);
    if (!r.note.empty()) out << "note\t" << r.note << "\n";
    return out.str();
}

}  // namespace

std::string render_report(const TheoremReport& r, bool as_json) {
    if (as_json) return report_json(r).dump() + "\n";
    return report_text(r);
}

std::string render_reports(const std::vector<TheoremReport>& rs, bool as_json) {
    if (as_json) {
        json out = json::array();
        for (const auto& r : rs) out.push_back(report_json(r));
        return out.dump() + "\n";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) out << "\n";
        out << report_text(rs[i]);
    }
    return out.str();
}

std::string render_gdim(const GDimReport& r, bool as_json) {
    if (as_json) {
        return json{{"d", r.d},
                    {"reflexive", r.reflexive},
                    {"ext_vanishing", r.ext_vanishing},
                    {"dual_ext_vanishing", r.dual_ext_vanishing},
                    {"bound", r.bound}}
                   .dump() +
               "\n";
    }
    std::ostringstream out;
    out << "d\t" << r.d << "\n";
    out << "reflexive\t" << (r.reflexive ? "yes" : "no") << "\n";
    out << "ext_vanishing\t" << (r.ext_vanishing ? "yes" : "no") << "\n";
    out << "dual_ext_vanishing\t" << (r.dual_ext_vanishing ? "yes" : "no") << "\n";
    out << "bound\t" << r.bound << "\n";
    return out.str();
}

std::string render_complete_resolution(const CompleteResolutionWindow& cr, bool as_json) {
    if (as_json) {
        json ranks = json::array();
        for (int i = cr.complex.lo; i <= cr.complex.hi; ++i)
            ranks.push_back({{"index", i}, {"rank", cr.complex.rank_at(i)}});
        return json{{"splice", cr.splice_index}, {"d", cr.d}, {"ranks", ranks}}.dump() + "\n";
    }
    std::ostringstream out;
    out << "splice\t" << cr.splice_index << "\n";
    for (int i = cr.complex.lo; i <= cr.complex.hi; ++i)
        out << i << "\t" << cr.complex.rank_at(i) << "\n";
    return out.str();
}

std::string render_homotopies(const HomotopySystem& H, const Ring& ring, bool as_json) {
    if (as_json) {
        json out = json::array();
        for (int i = 1; i <= H.imax; ++i)
            for (int j = 0; j <= H.J; ++j) {
                const PolyMatrix& m = H.sigma_at(i, j);
                json rows = json::array();
                for (int r = 0; r < m.rows(); ++r) {
                    json row = json::array();
                    for (int c = 0; c < m.cols(); ++c)
                        row.push_back(polynomial_to_string(m.at(r, c), ring));
                    rows.push_back(row);
                }
                out.push_back({{"i", i},
                               {"j", j},
                               {"rows", m.rows()},
                               {"cols", m.cols()},
                               {"entries", rows}});
            }
        return out.dump() + "\n";
    }
    std::ostringstream out;
    for (int i = 1; i <= H.imax; ++i)
        for (int j = 0; j <= H.J; ++j) {
            const PolyMatrix& m = H.sigma_at(i, j);
            out << "sigma " << i << " " << j << " " << m.rows() << " " << m.cols() << "\n";
            for (int r = 0; r < m.rows(); ++r) {
                for (int c = 0; c < m.cols(); ++c) {
                    if (c) out << ", ";
                    out << polynomial_to_string(m.at(r, c), ring);
                }
                out << "\n";
            }
        }
    return out.str();
}

std::string render_shamash(const ShamashComplex& s, bool as_json) {
    if (as_json) {
        json out = json::array();
        for (int n = s.window.lo; n <= s.window.hi; ++n) {
            json blocks = json::array();
            for (const auto& b : s.blocks[std::size_t(n)])
                blocks.push_back({{"i", b.i}, {"j", b.j}, {"rank", b.rank}});
            out.push_back({{"degree", n}, {"rank", s.window.rank_at(n)}, {"blocks", blocks}});
        }
        return out.dump() + "\n";
    }
    std::ostringstream out;
    for (int n = s.window.lo; n <= s.window.hi; ++n)
        out << n << "\t" << s.window.rank_at(n) << "\n";
    return out.str();
}

std::string render_prerigidity(const PrerigidityReport& r, bool as_json) {
    if (as_json) {
        json ws = json::array();
        for (const auto& w : r.witnesses)
            ws.push_back({{"candidate_r", w.candidate_r},
                          {"i", w.i},
                          {"j", w.j},
                          {"row", w.row},
                          {"col", w.col},
                          {"n_generator", w.n_generator}});
        json out{{"bound", r.bound}, {"witnesses", ws}};
        if (r.degree)
            out["degree"] = *r.degree;
        else
            out["degree"] = "not-within-bound";
        return out.dump() + "\n";
    }
    std::ostringstream out;
    if (r.degree)
        out << "degree\t" << *r.degree << "\n";
    else
        out << "degree\tnot-within-bound\t" << r.bound << "\n";
    for (const auto& w : r.witnesses)
        out << "witness\tr=" << w.candidate_r << "\tsigma " << w.i << " " << w.j << "\tentry ("
            << w.row << "," << w.col << ")\tgenerator " << w.n_generator << "\n";
    return out.str();
}

std::string render_poincare(const PoincareReport& r, bool as_json) {
    if (as_json) {
        json rows = json::array();
        for (std::size_t n = 0; n < r.r_betti.size(); ++n)
            rows.push_back(
                {{"index", n}, {"betti", r.r_betti[n]}, {"predicted", r.predicted[n]}});
        return json{{"holds", r.holds}, {"rows", rows}}.dump() + "\n";
    }
    std::ostringstream out;
    out << "holds\t" << (r.holds ? "yes" : "no") << "\n";
    for (std::size_t n = 0; n < r.r_betti.size(); ++n)
        out << n << "\t" << r.r_betti[n] << "\t" << r.predicted[n] << "\n";
    return out.str();
}

std::string render_hilbert(const HilbertData& h, bool as_json) {
    if (as_json) {
        json out{{"finite", h.finite_length}};
        if (h.finite_length) out["length"] = h.length;
        json vals = json::array();
        for (std::size_t i = 0; i < h.values.size(); ++i)
            vals.push_back({{"degree", h.degree_lo + int(i)}, {"value", h.values[i]}});
        out["hilbert"] = vals;
        return out.dump() + "\n";
    }
    std::ostringstream out;
    out << "finite\t" << (h.finite_length ? "yes" : "no") << "\n";
    if (h.finite_length) out << "length\t" << h.length << "\n";
    for (std::size_t i = 0; i < h.values.size(); ++i)
        out << h.degree_lo + int(i) << "\t" << h.values[i] << "\n";
    return out.str();
}

std::string render_manifest(const PaperExampleSpec& spec, bool as_json) {
    if (as_json) {
        json entries = json::array();
        for (const auto& e : spec.manifest)
            entries.push_back({{"kind", kind_name(e.kind)},
                               {"index", e.index},
                               {"zero", e.expect_zero}});
        return json{{"n", spec.n}, {"field", spec.p}, {"manifest", entries}}.dump() + "\n";
    }
    std::ostringstream out;
    for (const auto& e : spec.manifest)
        out << kind_name(e.kind) << "\t" << e.index << "\t" << (e.expect_zero ? "zero" : "nonzero")
            << "\n";
    return out.str();
}

}  // namespace homcalc
