// Generated by tests/oracle/make_oracle.py (mpmath, 30 digits). Do not edit.
#pragma once

namespace oracle {

struct RefPair { double x, y; };
struct RefComplex { double z, re, im; };

inline constexpr RefPair kK0[] = {
    {1.0e-6, 13.931442073626419413},
    {0.001, 7.0236888005623813436},
    {0.01, 4.7212447301610949651},
    {0.3, 1.3724600605442973766},
    {1.0, 0.42102443824070833334},
    {1.9, 0.12884597927604747986},
    {2.1, 0.10078374088996694581},
    {2.5, 0.062347553200366186029},
    {7.0, 0.00042479574186923180685},
    {20.0, 5.7412378153365242927e-10},
    {50.0, 3.4101677497894955139e-23},
};
inline constexpr RefPair kK0Laplace[] = {
    {0.25, 1.3613444250345883214},
    {0.9999, 1.0000333346667238121},
    {1.0, 1.0},
    {1.5, 0.86081788192800807778},
    {4.0, 0.53277716025197015336},
};
inline constexpr RefPair kArcsine1UExpU[] = {
    {0.2, 0.5854327850366260856},
    {1.0, 0.62266124613089205501},
    {2.0, 0.093001434093414242357},
};
inline constexpr RefPair kUpsilon0Gauss[] = {
    {0.3, 0.75989551005685845293},
    {1.0, 0.18692873226152801862},
    {3.0, 0.017181694072456546516},
};
inline constexpr RefPair kUpsilonM2_2Gauss[] = {
    {0.3, 0.97274329781661384496},
    {1.0, 0.23987554393612289474},
    {3.0, 0.0043934738409727169761},
};
inline constexpr RefPair kFracHalfExpU[] = {
    {0.1, 0.90483741803595957316},
    {1.0, 0.3678794411714423216},
    {4.0, 0.018315638888734180294},
};
inline constexpr RefPair kGaussTailInverse[] = {
    {1.0e-8, 4.0377270807674347204},
    {0.01, 1.7916566075893285935},
    {0.3, 0.67677615043320258375},
    {0.8, 0.086441746309571416625},
};
inline constexpr RefComplex kPsiAtom[] = {
    {-2.0, -3.832293673094284774, -0.41859485365136339079},
    {0.7, -0.59281562543102314749, 0.79843537447538210735},
    {3.0, -6.2299849932008909145, -1.8177599838802655558},
};
inline constexpr RefComplex kPsiExp[] = {
    {-1.5, -0.69230769230769230769, 0.053528480796179010787},
    {0.4, -0.13793103448275862069, 0.20747640158432573859},
    {2.0, -0.8, -0.28675592311285406567},
};
inline constexpr RefComplex kPhiAtom_cos_pi_half[] = {
    {-1.2, -0.83773451147127465305, -0.76233932358243062696},
    {0.5, -0.15431038551837419154, 0.39629490883885596625},
    {2.0, -2.0522184417175286639, 0.6904500177015779048},
};
inline constexpr RefComplex kPhiAtom_log_sqrt[] = {
    {-1.2, -1.4994316887911470334, -0.73948829161593702767},
    {0.5, -0.30233916356289821236, 0.52235372647887998203},
    {2.0, -3.1523180276510736765, 0.06338096871272314701},
};
inline constexpr RefComplex kPhiAtom_log[] = {
    {-1.2, -1.9003278688524590164, -0.14360655737704918033},
    {0.5, -0.525, 0.45},
    {2.0, -3.6, -0.6},
};
inline constexpr RefComplex kPhiAtom_gauss_tail_inverse[] = {
    {-1.2, -0.69537560665680100381, -0.52952640732595586121},
    {0.5, -0.1350821415512241416, 0.30467832712579642473},
    {2.0, -1.5635179814586028511, 0.37615901382553683827},
};
inline constexpr RefComplex kPhiExp_cos_pi_half[] = {
    {-1.0, -0.2928932188134524756, -0.17815631078970809321},
    {0.8, -0.21913119055696967238, 0.18934053670509636152},
};

}  // namespace oracle
