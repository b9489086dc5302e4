#ifndef HOMCALC_SESSION_HPP
#define HOMCALC_SESSION_HPP

#include <string>
#include <utility>
#include <vector>

#include "homcalc/groebner.hpp"
#include "homcalc/presentation.hpp"

namespace homcalc {

/* A parsed and fully validated session: declarations appear in the order
 * field, ring, quotient*, module*; every quotient element is certified a
 * non-zerodivisor modulo the previous quotients at load time. */
struct SessionFile {
    std::uint32_t p = 2;
    std::vector<std::string> vars;
    std::vector<Polynomial> quotients;
    std::vector<std::pair<std::string, ModulePresentation>> modules;

    CtxPtr base;                           // the polynomial ring S
    std::vector<HypersurfaceTower> towers;  // one per quotient line
    CtxPtr top;                            // the ring all modules live over

    const ModulePresentation& module(const std::string& name) const;
    bool has_module(const std::string& name) const;
    /* The tower used by the hypersurface commands: the last quotient is x,
     * the ring just below it is Q. */
    const HypersurfaceTower& top_tower() const;
    Ring ring() const { return Ring{PrimeField(p), vars}; }
};

SessionFile parse_session(const std::string& text);
SessionFile parse_session_file(const std::string& path);
std::string emit_session(const SessionFile& s);

}  // namespace homcalc

#endif
