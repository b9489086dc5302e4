#include "homcalc/session.hpp"

#include <fstream>
#include <sstream>

#include "homcalc/errors.hpp"
#include "homcalc/text.hpp"

namespace homcalc {

const ModulePresentation& SessionFile::module(const std::string& name) const {
    for (const auto& [n, m] : modules)
        if (n == name) return m;
    throw UsageError("unknown module '" + name + "'");
}

bool SessionFile::has_module(const std::string& name) const {
    for (const auto& [n, m] : modules)
        if (n == name) return true;
    return false;
}

const HypersurfaceTower& SessionFile::top_tower() const {
    if (towers.empty()) throw UsageError("session declares no quotient, so there is no tower");
    return towers.back();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw ParseError(line, col, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

SessionFile parse_session(const std::string& text) {
    SessionFile s;
    bool have_field = false, have_ring = false;
    bool modules_started = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;

        const std::string& head = tok[0];
        if (head == "field") {
            if (have_field) fail(lineno, 1, "duplicate field declaration");
            if (tok.size() != 2) fail(lineno, 1, "usage: field <p>");
            try {
                s.p = std::uint32_t(std::stoul(tok[1]));
                PrimeField check(s.p);
            } catch (const Error& e) {
                fail(lineno, 7, e.what());
            } catch (const std::exception&) {
                fail(lineno, 7, "invalid field modulus '" + tok[1] + "'");
            }
            have_field = true;
        } else if (head == "ring") {
            if (!have_field) fail(lineno, 1, "ring declared before field");
            if (have_ring) fail(lineno, 1, "duplicate ring declaration");
            if (tok.size() < 2) fail(lineno, 1, "usage: ring <v1> <v2> ...");
            for (std::size_t i = 1; i < tok.size(); ++i) {
                for (const auto& v : s.vars)
                    if (v == tok[i]) fail(lineno, 1, "duplicate variable '" + tok[i] + "'");
                s.vars.push_back(tok[i]);
            }
            have_ring = true;
            s.base = QuotientRingCtx::polynomial_ring(Ring{PrimeField(s.p), s.vars});
            s.top = s.base;
        } else if (head == "quotient") {
            if (!have_ring) fail(lineno, 1, "quotient declared before ring");
            if (modules_started) fail(lineno, 1, "quotient declared after modules");
            auto pos = line.find("quotient");
            std::string body = line.substr(pos + 8);
            Polynomial q(PrimeField(s.p), int(s.vars.size()));
            try {
                q = parse_polynomial(body, Ring{PrimeField(s.p), s.vars});
            } catch (const Error& e) {
                fail(lineno, int(pos) + 9, e.what());
            }
            if (!q.is_homogeneous())
                throw InhomogeneousError("line " + std::to_string(lineno) +
                                         ": quotient element must be homogeneous");
            HypersurfaceTower t{nullptr, q, nullptr};
            try {
                t = make_tower(s.top, q);
            } catch (const ZerodivisorError&) {
                throw ZerodivisorError(
                    "line " + std::to_string(lineno) + ": '" +
                    polynomial_to_string(q, Ring{PrimeField(s.p), s.vars}) +
                    "' is a zerodivisor modulo the previous quotients");
            }
            s.top = t.R;
            s.towers.push_back(std::move(t));
            s.quotients.push_back(std::move(q));
        } else if (head == "module") {
            if (!have_ring) fail(lineno, 1, "module declared before ring");
            modules_started = true;
            if (tok.size() < 5 || tok[2] != "cokernel")
                fail(lineno, 1, "usage: module <Name> cokernel <rows> <cols> [ ... ]");
            std::string name = tok[1];
            if (s.has_module(name)) fail(lineno, 1, "duplicate module '" + name + "'");
            int rows = 0, cols = 0;
            try {
                rows = std::stoi(tok[3]);
                cols = std::stoi(tok[4]);
            } catch (const std::exception&) {
                fail(lineno, 1, "invalid cokernel dimensions");
            }
            if (rows < 1 || cols < 0) fail(lineno, 1, "cokernel needs rows >= 1, cols >= 0");
            auto open = line.find('[');
            auto close = line.rfind(']');
            if (open == std::string::npos || close == std::string::npos || close < open)
                fail(lineno, 1, "missing [ ... ] entry block");
            std::string body = line.substr(open + 1, close - open - 1);

            // rows separated by ';', entries by ','
            Ring ring{PrimeField(s.p), s.vars};
            PolyMatrix rel(PrimeField(s.p), int(s.vars.size()), rows, cols);
            std::vector<std::string> row_texts;
            {
                std::string cur;
                for (char c : body) {
                    if (c == ';') {
                        row_texts.push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                row_texts.push_back(cur);
            }
            if (int(row_texts.size()) != rows)
                fail(lineno, int(open) + 1,
                     "expected " + std::to_string(rows) + " matrix rows, found " +
                         std::to_string(row_texts.size()));
            for (int i = 0; i < rows; ++i) {
                std::vector<std::string> cells;
                std::string cur;
                for (char c : row_texts[i]) {
                    if (c == ',') {
                        cells.push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                cells.push_back(cur);
                if (cols == 0) {
                    bool empty = true;
                    for (const auto& c : cells)
                        if (!tokenize(c).empty()) empty = false;
                    if (!empty) fail(lineno, int(open) + 1, "entries given for a 0-column matrix");
                    continue;
                }
                if (int(cells.size()) != cols)
                    fail(lineno, int(open) + 1,
                         "row " + std::to_string(i + 1) + " has " +
                             std::to_string(cells.size()) + " entries, expected " +
                             std::to_string(cols));
                for (int j = 0; j < cols; ++j) {
                    try {
                        rel.set(i, j, parse_polynomial(cells[j], ring));
                    } catch (const Error& e) {
                        fail(lineno, int(open) + 1, e.what());
                    }
                }
            }

            std::vector<int> shifts(rows, 0);
            std::vector<std::string> tail = tokenize(line.substr(close + 1));
            if (!tail.empty()) {
                if (tail[0] != "shifts")
                    fail(lineno, int(close) + 2, "unexpected trailing tokens after ']'");
                if (int(tail.size()) != rows + 1)
                    fail(lineno, int(close) + 2,
                         "shifts needs one value per ambient generator");
                for (int i = 0; i < rows; ++i) {
                    try {
                        shifts[i] = std::stoi(tail[i + 1]);
                    } catch (const std::exception&) {
                        fail(lineno, int(close) + 2, "invalid shift value");
                    }
                }
            }
            s.modules.emplace_back(name,
                                   ModulePresentation(s.top, rows, std::move(shifts), rel));
        } else {
            fail(lineno, 1, "unknown declaration '" + head + "'");
        }
    }
    if (!have_field) fail(1, 1, "missing field declaration at line 1");
    if (!have_ring) fail(lineno ? lineno : 1, 1, "missing ring declaration");
    return s;
}

SessionFile parse_session_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read session file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_session(buf.str());
}

std::string emit_session(const SessionFile& s) {
    Ring ring{PrimeField(s.p), s.vars};
    std::ostringstream out;
    out << "field " << s.p << "\n";
    out << "ring";
    for (const auto& v : s.vars) out << " " << v;
    out << "\n";
    for (const auto& q : s.quotients) out << "quotient " << polynomial_to_string(q, ring) << "\n";
    for (const auto& [name, m] : s.modules) {
        out << "module " << name << " cokernel " << m.ambient_rank() << " "
            << m.relations().cols() << " [ ";
        for (int i = 0; i < m.ambient_rank(); ++i) {
            if (i) out << " ; ";
            for (int j = 0; j < m.relations().cols(); ++j) {
                if (j) out << ", ";
                out << polynomial_to_string(m.relations().at(i, j), ring);
            }
        }
        out << " ]";
        bool nonzero_shift = false;
        for (int v : m.ambient_shifts())
            if (v != 0) nonzero_shift = true;
        if (nonzero_shift) {
            out << " shifts";
            for (int v : m.ambient_shifts()) out << " " << v;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace homcalc
