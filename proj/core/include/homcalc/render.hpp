#ifndef HOMCALC_RENDER_HPP
#define HOMCALC_RENDER_HPP

#include <string>

#include "homcalc/rigidity.hpp"
#include "homcalc/session.hpp"

namespace homcalc {

/* TSV is the default rendering; JSON is one object per row with fields
 * {index, rank?, zero, length}. All numbers are exact integers; infinite
 * lengths render as "inf". */
std::string render_betti(const BettiTable& b, bool json);
std::string render_window(const VanishingWindow& w, bool json);
std::string render_report(const TheoremReport& r, bool json);
std::string render_reports(const std::vector<TheoremReport>& rs, bool json);
std::string render_gdim(const GDimReport& r, bool json);
std::string render_complete_resolution(const CompleteResolutionWindow& cr, bool json);
std::string render_homotopies(const HomotopySystem& H, const Ring& ring, bool json);
std::string render_shamash(const ShamashComplex& s, bool json);
std::string render_prerigidity(const PrerigidityReport& r, bool json);
std::string render_poincare(const PoincareReport& r, bool json);
std::string render_hilbert(const HilbertData& h, bool json);
std::string render_manifest(const PaperExampleSpec& spec, bool json);

}  // namespace homcalc

#endif
