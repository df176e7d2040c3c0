"""
Closed-form relations as Python expression strings.

Every string is evaluated by :func:`evaluate` with series bound to its
free names.  Naming: a trailing ``p`` is q1 d/dq1, a trailing ``b`` is
q2 d/dq2 (``pb`` both, ``bb`` twice); doubled letters (``JJ14``,
``KK11``, ``MM13``) are the reduced local series; ``L``/``UD`` are the
leading asymptotic series at a fixed point; ``Delta`` is the common
denominator of the local J, K and E series; ``sj`` is (-1)^j and
``F`` builds exact rationals.

The strings were produced mechanically from typeset formulas (see the
repository notes) and are kept verbatim except where noted in
``CORRECTIONS``.
"""

from fractions import Fraction

__all__ = ["evaluate", "J_SERIES", "K_SERIES", "REDUCED", "M_SERIES", "E_SERIES",
           "MG_CLOSED_FORMS", "RELATION_RE", "TABLE_32", "TABLE_33", "TABLE_42",
           "K3_QUADRATIC", "K3_QUADRATIC_L4", "CORRECTIONS"]


def evaluate(expr, env):
    """Evaluate ``expr`` with the series in ``env``."""
    scope = {"F": Fraction, "__builtins__": {}}
    scope.update(env)
    return eval(expr, scope)  # noqa: S307 - fixed internal strings only


J_SERIES = {
    'J11': '(I11*I12b + I11 + I12b*I21p - I12p*I21b + I21p)/Delta',
    'J12': '(-I11*I12p - I12p*I22b + (I12 + I22p)*(I12b + 1))/Delta',
    'J13': '(-I12*I12p + I12b*I23p - I12p*I23b + I23p)/Delta',
    'J14': '(I12b*I24p - I12p*I24b + I24p)/Delta',
    'J15': '(I12b*I25p - I12p*I25b + I25p)/Delta',
    'J21': '(I12b*I21 + I12b*I31p - I12p*I31b + I21 + I31p)/Delta',
    'J22': '(-I12p*(I21 + I32b) + (I12b + 1)*(I22 + I32p))/Delta',
    'J23': '(-I12p*(I22 + I33b) + (I12b + 1)*(I23 + I33p))/Delta',
    'J24': '(-I12p*(I23 + I34b) + I34p*(I12b + 1))/Delta',
    'J25': '(I12b*I24 + I12b*I35p - I12p*I35b + I24 + I35p)/Delta',
    'J26': '(-I12p*(I24 + I36b) + (I12b + 1)*(I25 + I36p))/Delta',
    'J27': '(-I12p*(I25 + I37b) + I37p*(I12b + 1))/Delta',
    'J28': '(I12b*I38p - I12p*I38b + I38p)/Delta',
    'J29': '(I12b*I39p - I12p*I39b + I39p)/Delta',
}

K_SERIES = {
    'K11': '(-I11*I11b - I11b*I21p + I11p*I21b + I21b)/Delta',
    'K12': '(I11*(I11p + 1) - I11b*(I12 + I22p) + I22b*(I11p + 1))/Delta',
    'K13': '(-I11b*I23p + I11p*I12 + I11p*I23b + I12 + I23b)/Delta',
    'K14': '(-I11b*I24p + I11p*I24b + I24b)/Delta',
    'K15': '(-I11b*I25p + I11p*I25b + I25b)/Delta',
    'K21': '(-I11b*(I21 + I31p) + I31b*(I11p + 1))/Delta',
    'K22': '(-I11b*(I22 + I32p) + I21*(I11p + 1) + I32b*(I11p + 1))/Delta',
    'K23': '(-I11b*(I23 + I33p) + I22*(I11p + 1) + I33b*(I11p + 1))/Delta',
    'K24': '(-I11b*I34p + I11p*I23 + I11p*I34b + I23 + I34b)/Delta',
    'K25': '(-I11b*(I24 + I35p) + I35b*(I11p + 1))/Delta',
    'K26': '(-I11b*(I25 + I36p) + I24*(I11p + 1) + I36b*(I11p + 1))/Delta',
    'K27': '(-I11b*I37p + I11p*I25 + I11p*I37b + I25 + I37b)/Delta',
    'K28': '(-I11b*I38p + I11p*I38b + I38b)/Delta',
    'K29': '(-I11b*I39p + I11p*I39b + I39b)/Delta',
}

REDUCED = {
    'JJ11': 'J12',
    'JJ12': 'J14',
    'JJ13': 'J15 + s1*J13',
    'JJ14': 'J11 - s2*J13',
    'KK11': 'K12',
    'KK12': 'K14',
    'KK13': 'K15 + s1*K13',
    'KK14': 'K11 - s2*K13',
}

M_SERIES = {
    'MM11': '(J26b - JJ11*JJ12b + JJ12 - JJ13b*KK11 + s1*(J23b + JJ11))/(JJ11b + 1)',
    'MM12': '(-I11*JJ14b + J21b + J28b - JJ12*JJ12b - JJ13b*KK12 - s2*(J23b + JJ11))/(JJ11b + 1)',
    'MM13': '(-I12*JJ14b + J22b + J24b*(s1**2 - s2) + J29b - JJ12b*JJ13 - JJ13b*KK13 + JJ14 + s1*(J27b + JJ13))/(JJ11b + 1)',
    'MM14': '(-J24b*s1*s2 + J25b - JJ12b*JJ14 - JJ13b*KK14 - s2*(J27b + JJ13))/(JJ11b + 1)',
}

E_SERIES = {
    'E11': '(I12b + 1)/(-I11b*I12p + I11p*I12b + I11p + I12b + 1)',
    'E12': '-I12p/(-I11b*I12p + I11p*I12b + I11p + I12b + 1)',
    'E21': '-I11b/(-I11b*I12p + I11p*I12b + I11p + I12b + 1)',
    'E22': '(I11p + 1)/(-I11b*I12p + I11p*I12b + I11p + I12b + 1)',
    'E31': '1/(KK11p + 1)',
    'E32': '-KK14p/(KK11p + 1)',
}

MG_CLOSED_FORMS = {
    'JJ11p': '-(L + UD)**2*(I11b*(L**2 - 1) - I11p*L*UD + L**2 - 1)/(2*(I11b + I11p + 1)**2*(L**2 - UD**2 - 1))',
    'JJ11b': '(I11b**2*(-2*L**2 + 2*UD**2 + 2) - I11b*(L**3*UD + 2*L**2*(UD**2 + 2) + L*UD**3 - 4*UD**2 - 4) + I11p**2*(-2*L**2 + 2*UD**2 + 2) + I11p*(I11b*(-4*L**2 + 4*UD**2 + 4) + L**2*(UD**2 - 3) + 2*L*(UD**3 + UD) + UD**4 + 5*UD**2 + 4) - L**3*UD - 2*L**2*UD**2 - 2*L**2 - L*UD**3 + 2*UD**2 + 2)/(2*(I11b + I11p + 1)**2*(L**2 - UD**2 - 1))',
    'JJ14p': '(2*I11p**2*(L**2*(UD**2 - 1) + L*(UD**3 + UD) + UD**2 + 1) + I11p*(-4*I11b*(L**2 - 1)*(L*UD + UD**2 + 1) - 3*L**3*UD - 2*L**2*(UD**2 + 2) + L*UD*(UD**2 + 4) + 4*UD**2 + 4) + (I11b + 1)*(L**2 - 1)*(2*I11b*(L**2 + L*UD - 1) + L**2 - UD**2 - 2))/(2*(I11b + I11p + 1)**2*(L**2 - UD**2 - 1))',
    'JJ14b': '(2*I11p**2*(L**2 + L*(UD**3 + UD) + UD**4 + UD**2) + I11p*(L**2*(-UD**2*(4*I11b + 3) + 1) - L*(4*I11b + 2)*(UD**3 + UD) + UD**4 + UD**2) + L*UD*(I11b + 1)*(2*I11b*(L**2 + L*UD - 1) + L**2 - UD**2 - 2))/(2*(I11b + I11p + 1)**2*(L**2 - UD**2 - 1))',
    'KK11p': '(I11b**2*(-2*L**2 + 2*UD**2 + 2) + I11b*(L**4 + 2*L**3*UD + L**2*(UD**2 - 5) - 2*L*UD + 3*UD**2 + 4) + I11p**2*(-2*L**2 + 2*UD**2 + 2) - I11p*(4*I11b*(L**2 - UD**2 - 1) + L**3*UD + 2*L**2*(UD**2 + 2) + L*UD**3 - 4*UD**2 - 4) - L**3*UD - 2*L**2*UD**2 - 2*L**2 - L*UD**3 + 2*UD**2 + 2)/(2*(I11b + I11p + 1)**2*(L**2 - UD**2 - 1))',
    'KK11b': '-(L + UD)**2*(-I11b*L*UD + I11p*UD**2 + I11p + UD**2 + 1)/(2*(I11b + I11p + 1)**2*(L**2 - UD**2 - 1))',
    'KK14p': '(-2*I11b**2*(L**4 + L**3*UD - L**2 - L*UD - UD**2) + I11b*(-L**4 + 2*L**3*(2*I11p*UD + UD) + L**2*(UD**2*(4*I11p + 3) + 1) - 2*L*(2*I11p*UD + UD) + UD**2) - L*UD*(I11p + 1)*(2*I11p*(L*UD + UD**2 + 1) - L**2 + UD**2 + 2))/(2*(I11b + I11p + 1)**2*(L**2 - UD**2 - 1))',
    'KK14b': '(-2*I11b**2*(L**3*UD + L**2*(UD**2 - 1) - L*UD + UD**2 + 1) + I11b*(-L**3*UD + 2*L**2*(UD**2 + 2) + L*UD*(3*UD**2 + 4) - 4*UD**2 - 4) - 2*I11p**2*(UD**2 + 1)*(L*UD + UD**2 + 1) + I11p*(UD**2 + 1)*(4*I11b*(L**2 + L*UD - 1) + L**2 - 2*L*UD - 3*UD**2 - 4) + (UD**2 + 1)*(L**2 - UD**2 - 2))/(2*(I11b + I11p + 1)**2*(L**2 - UD**2 - 1))',
    'MM12p': '-(L**2*(2*I11p**2 + 3*I11p + 1) + L*UD*(-4*I11b*I11p - 2*I11b*(I11b + 2) + 2*I11p**2 + 2*I11p) + UD**2*(2*I11p**2 + 3*I11p + 1))/(L + UD)**2',
    'MM12b': '(L**2*(2*I11b**2 + I11b + 1) - L*UD*(-2*I11b*(I11b - 1) + 2*I11p**2 + 4*I11p*(I11b + 1)) + UD**2*(2*I11b**2 + I11b + 1))/(L + UD)**2',
    'MM13p': '-(L**2*(2*I11p**2 + I11p + 1) - L*UD*(4*I11b*I11p + 2*I11b*(I11b + 2) - 2*I11p**2 + 2*I11p) + UD**2*(2*I11p**2 + I11p + 1))/(L + UD)**2',
    'MM13b': '(L**2*(2*I11b**2 + 3*I11b + 1) - L*UD*(-2*I11b*(I11b + 1) + 2*I11p**2 + 4*I11p*(I11b + 1)) + UD**2*(2*I11b**2 + 3*I11b + 1))/(L + UD)**2',
}

RELATION_RE = '-I11b**2*(L**5*(UD**2 + 1) + L**4*(UD**3 + UD) - L**3*(UD**2 + 1)**2 - L**2*UD*(UD**4 + 6*UD**2 - 3) + L*(UD**4 + UD**2) + UD**5 + UD**3) + I11b*(4*I11bb*L**6*UD - L**5*(-4*I11bb*UD**2 + I11p*(UD**2 + 1) + 4*I11pb*(UD**2 + 1) + UD**2 + 1) - L**4*UD*(4*I11bb + 4*I11pb)*(UD**2 + 1) + L**3*(UD**2 + 1)*(-4*I11bb*UD**2 + 2*I11p*UD**2 + I11p + 4*I11pb*(UD**2 + 1) + 2*UD**2 + 1) + L**2*UD*(4*I11bb + I11p*(UD**2 + 1) + 4*I11pb*(UD**2 + 1)**2 + UD**2 + 1) - L*UD**2*(-4*I11bb*UD**2 + I11p*(UD**2 + 1)**2 + 4*I11pb*(UD**2 + 1) + UD**4 + 2*UD**2 + 1) - UD**3*(UD**2 + 1)*(I11p + 4*I11pb + 1)) + L*UD*(I11p + 1)*(L - UD)*(L + UD)**2*(-4*I11bb*L*UD + I11p*(UD**2 + 1) + 4*I11pb*(UD**2 + 1) + UD**2 + 1)'

TABLE_32 = {
    'A1p': '-(35*B1p**2 + 54*B1p*L**2*(B1p + 2) + 36*B1p*L*(B1p + 2) + 70*B1p - 27*L**3 + 27)/((B1p + 1)**2*(54*L**2 + 36*L + 35))',
    'A2p': '(B1p**2*(81*L**3 + 54*L**2 + 36*L - 46) + B1p*(162*L**3 + 108*L**2 + 72*L - 92) + 54*L**3 - 54)/((B1p + 1)**2*(162*L**2 + 108*L + 105))',
    'B2p': '-(70*B1p**3 + 256*B1p**2 + 54*B1p*L**2*(2*B1p**2 + 5*B1p + 4) + 36*B1p*L*(2*B1p**2 + 5*B1p + 4) + 302*B1p - 27*L**3*(3*B1p**2 + 6*B1p + 4) + 108)/((B1p + 1)**2*(162*L**2 + 108*L + 105))',
    'B3p': '-(348*B1p**4 + 1252*B1p**3 + 54*B1p**2*L**2*(3*B1p**2 + 8*B1p + 6) + 36*B1p**2*L*(3*B1p**2 + 8*B1p + 6) + 1668*B1p**2 + 972*B1p - 27*L**3*(9*B1p**4 + 36*B1p**3 + 54*B1p**2 + 36*B1p + 8) + 216)/((B1p + 1)**2*(486*L**2 + 324*L + 315))',
    'C1p': '0',
    'C2p': '-(35*B1p**2 + 54*B1p*L**2*(B1p + 2) + 36*B1p*L*(B1p + 2) + 70*B1p - 27*L**3 + 27)/((B1p + 1)**2*(54*L**2 + 36*L + 35))',
    'C3p': '(-46*B1p**2 + 54*B1p*L**2*(B1p + 2) + 36*B1p*L*(B1p + 2) - 92*B1p + 27*L**3*(3*B1p**2 + 6*B1p + 2) - 54)/((B1p + 1)**2*(162*L**2 + 108*L + 105))',
    'E1p': 'B1p',
    'E2p': '2*B1p/3',
    'E3p': '(-B1p**3*(216*L**2 + 144*L + 140) - B1p**2*(-162*L**3 + 324*L**2 + 216*L + 372) + B1p*(324*L**3 - 324) + 108*L**3 - 108)/((B1p + 1)**2*(486*L**2 + 324*L + 315))',
    'E4p': '-(696*B1p**4 + 108*B1p**3*L**2*(3*B1p + 4) + 72*B1p**3*L*(3*B1p + 4) + 2224*B1p**3 + 2592*B1p**2 + 1296*B1p - 54*L**3*(3*B1p**2 + 6*B1p + 2)**2 + 216)/((B1p + 1)**2*(1458*L**2 + 972*L + 945))',
    'F1p': '0',
    'F2p': 'B1p',
    'F3p': '-(70*B1p**3 + 256*B1p**2 + 54*B1p*L**2*(2*B1p**2 + 5*B1p + 4) + 36*B1p*L*(2*B1p**2 + 5*B1p + 4) + 302*B1p - 27*L**3*(3*B1p**2 + 6*B1p + 4) + 108)/((B1p + 1)**2*(162*L**2 + 108*L + 105))',
    'F4p': '-(348*B1p**4 + 1252*B1p**3 + 54*B1p**2*L**2*(3*B1p**2 + 8*B1p + 6) + 36*B1p**2*L*(3*B1p**2 + 8*B1p + 6) + 1668*B1p**2 + 972*B1p - 27*L**3*(9*B1p**4 + 36*B1p**3 + 54*B1p**2 + 36*B1p + 8) + 216)/((B1p + 1)**2*(486*L**2 + 324*L + 315))',
    'G1p': '0',
    'G2p': 'B1p',
    'G3p': '2*B1p/3',
    'G4p': '(-B1p**3*(216*L**2 + 144*L + 140) - B1p**2*(-162*L**3 + 324*L**2 + 216*L + 372) + B1p*(324*L**3 - 324) + 108*L**3 - 108)/((B1p + 1)**2*(486*L**2 + 324*L + 315))',
    'G5p': '-(696*B1p**4 + 108*B1p**3*L**2*(3*B1p + 4) + 72*B1p**3*L*(3*B1p + 4) + 2224*B1p**3 + 2592*B1p**2 + 1296*B1p - 54*L**3*(3*B1p**2 + 6*B1p + 2)**2 + 216)/((B1p + 1)**2*(1458*L**2 + 972*L + 945))',
}

TABLE_33 = {
    'A1p': '(-B1p**2*(3*L**2 + 3*L + 2) - 2*B1p*(3*L**2 + 3*L + 2) + L**3 - 1)/((B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'A2p': '(B1p**2*(3*L**3 + 3*L**2 + 3*L - 1) + B1p*(6*L**3 + 6*L**2 + 6*L - 2) + 2*L**3 - 2)/(2*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'B2p': '(-2*B1p**3*(3*L**2 + 3*L + 2) + B1p**2*(3*L**3 - 15*L**2 - 15*L - 13) + 2*B1p*(3*L**3 - 6*L**2 - 6*L - 7) + 4*L**3 - 4)/(2*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'B3p': '(3*B1p**4*(3*L**3 - 3*L**2 - 3*L - 5) + 4*B1p**3*(9*L**3 - 6*L**2 - 6*L - 13) + 6*B1p**2*(9*L**3 - 3*L**2 - 3*L - 11) + 36*B1p*(L**3 - 1) + 8*L**3 - 8)/(4*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'C1p': '0',
    'C2p': '(-B1p**2*(3*L**2 + 3*L + 2) - B1p*(6*L**2 + 6*L + 4) + L**3 - 1)/((B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'C3p': '(B1p**2*(3*L**3 + 3*L**2 + 3*L - 1) + B1p*(6*L**3 + 6*L**2 + 6*L - 2) + 2*L**3 - 2)/(2*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'E1p': '(3*B1p**4*(3*L**3 - 3*L**2 - 3*L - 5) + 36*B1p**3*(L**3 - 1) + 8*B1p**2*(6*L**3 + 3*L**2 + 3*L - 4) + 4*B1p*(6*L**3 + 3*L**2 + 3*L - 4) + 4*L**3 - 4)/(4*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'E2p': 'B1p',
    'E3p': '(-2*B1p**3*(3*L**2 + 3*L + 2) + 3*B1p**2*(L**3 - 3*L**2 - 3*L - 3) + 6*B1p*(L**3 - 1) + 2*L**3 - 2)/(2*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'F1p': '(3*B1p**4*(3*L**3 - 3*L**2 - 3*L - 5) + 4*B1p**3*(9*L**3 - 6*L**2 - 6*L - 13) + 6*B1p**2*(9*L**3 - 3*L**2 - 3*L - 11) + 36*B1p*(L**3 - 1) + 8*L**3 - 8)/(4*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'F2p': 'B1p',
    'F3p': '(-2*B1p**3*(3*L**2 + 3*L + 2) + B1p**2*(3*L**3 - 15*L**2 - 15*L - 13) + 2*B1p*(3*L**3 - 6*L**2 - 6*L - 7) + 4*L**3 - 4)/(2*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'G1p': '(B1p**2*(3*L**3 + 3*L**2 + 3*L - 1) + B1p*(6*L**3 + 6*L**2 + 6*L - 2) + 2*L**3 - 2)/(2*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'G2p': '0',
    'G3p': '(-B1p**2*(3*L**2 + 3*L + 2) - B1p*(6*L**2 + 6*L + 4) + L**3 - 1)/((B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'H1p': '(-2*B1p**3*(3*L**2 + 3*L + 2) + 3*B1p**2*(L**3 - 3*L**2 - 3*L - 3) + 6*B1p*(L**3 - 1) + 2*L**3 - 2)/(2*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'H2p': '(3*B1p**4*(3*L**3 - 3*L**2 - 3*L - 5) + 36*B1p**3*(L**3 - 1) + 8*B1p**2*(6*L**3 + 3*L**2 + 3*L - 4) + 4*B1p*(6*L**3 + 3*L**2 + 3*L - 4) + 4*L**3 - 4)/(4*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'H3p': 'B1p',
    'I1p': '(-2*B1p**3*(3*L**2 + 3*L + 2) + B1p**2*(3*L**3 - 15*L**2 - 15*L - 13) + 2*B1p*(3*L**3 - 6*L**2 - 6*L - 7) + 4*L**3 - 4)/(2*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'I2p': '(3*B1p**4*(3*L**3 - 3*L**2 - 3*L - 5) + 4*B1p**3*(9*L**3 - 6*L**2 - 6*L - 13) + 6*B1p**2*(9*L**3 - 3*L**2 - 3*L - 11) + 36*B1p*(L**3 - 1) + 8*L**3 - 8)/(4*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'I3p': 'B1p',
    'J1p': 'B1p',
    'J2p': '(-2*B1p**3*(3*L**2 + 3*L + 2) + 3*B1p**2*(L**3 - 3*L**2 - 3*L - 3) + 6*B1p*(L**3 - 1) + 2*L**3 - 2)/(2*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
    'J3p': '(3*B1p**4*(3*L**3 - 3*L**2 - 3*L - 5) + 36*B1p**3*(L**3 - 1) + 8*B1p**2*(6*L**3 + 3*L**2 + 3*L - 4) + 4*B1p*(6*L**3 + 3*L**2 + 3*L - 4) + 4*L**3 - 4)/(4*(B1p + 1)**2*(3*L**2 + 3*L + 2))',
}

TABLE_42 = {
    'A2p': 'A1p**2*E1p**2 + 2*A1p**2*E1p + A1p**2 + 2*A1p*E1p**2 + 4*A1p*E1p + 7*A1p/4 - B2p/2 + E1p**2 + 2*E1p',
    'B1p': 'A1p',
    'B3p': '(16*A1p**4*(E1p + 1)**4 + 8*A1p**3*(E1p + 1)**2*(8*E1p**2 + 16*E1p + 9) + A1p**2*(16*B2p*(E1p + 1)**2 + 96*E1p**4 + 384*E1p**3 + 584*E1p**2 + 400*E1p + 105) + 4*A1p*(B2p*(8*E1p**2 + 16*E1p + 5) + 16*E1p**4 + 64*E1p**3 + 94*E1p**2 + 60*E1p + 13) - 12*B2p**2 + 4*B2p*(4*E1p**2 + 8*E1p - 2) + 8*E1p*(2*E1p**3 + 8*E1p**2 + 11*E1p + 6))/(32*A1p + 32)',
    'C1p': '0',
    'C2p': 'A1p',
    'C3p': 'A1p**2*E1p**2 + 2*A1p**2*E1p + A1p**2 + 2*A1p*E1p**2 + 4*A1p*E1p + 7*A1p/4 - B2p/2 + E1p**2 + 2*E1p',
    'E2p': 'A1p**2*E1p**2 + 2*A1p**2*E1p + A1p**2 + 2*A1p*E1p**2 + 4*A1p*E1p + 9*A1p/4 - B2p/2 + E1p**2 + 3*E1p/2',
    'E3p': '(16*A1p**4*(E1p + 1)**4 + 8*A1p**3*(E1p + 1)**2*(8*E1p**2 + 16*E1p + 7) + A1p**2*(16*B2p*(E1p + 1)**2 + 96*E1p**4 + 384*E1p**3 + 536*E1p**2 + 304*E1p + 53) + 4*A1p*(B2p*(8*E1p**2 + 16*E1p + 11) + 16*E1p**4 + 64*E1p**3 + 82*E1p**2 + 38*E1p + 4) - 12*B2p**2 + 16*B2p*(E1p + 1)**2 + 8*E1p*(2*E1p**3 + 8*E1p**2 + 9*E1p + 3))/(32*A1p + 32)',
    'E4p': '(64*A1p**6*(E1p + 1)**6 + 384*A1p**5*(E1p + 1)**6 + 4*A1p**4*(E1p + 1)**2*(-8*B2p*(E1p + 1)**2 + 240*E1p**4 + 960*E1p**3 + 1412*E1p**2 + 904*E1p + 213) - 2*A1p**3*(64*B2p*(E1p + 1)**4 - 640*E1p**6 - 3840*E1p**5 - 9376*E1p**4 - 11904*E1p**3 - 8264*E1p**2 - 2960*E1p - 425) + A1p**2*(-16*B2p**2*(E1p + 1)**2 - 2*B2p*(96*E1p**4 + 384*E1p**3 + 560*E1p**2 + 352*E1p + 83) + 960*E1p**6 + 5760*E1p**5 + 13728*E1p**4 + 16512*E1p**3 + 10444*E1p**2 + 3216*E1p + 359) - 4*A1p*(8*B2p**2*(E1p + 1)**2 + B2p*(32*E1p**4 + 128*E1p**3 + 176*E1p**2 + 96*E1p + 19) - 96*E1p**6 - 576*E1p**5 - 1328*E1p**4 - 1472*E1p**3 - 798*E1p**2 - 184*E1p - 10) + 8*B2p**3 - 4*B2p**2*(4*E1p**2 + 8*E1p + 1) - 32*B2p*E1p*(E1p + 1)**2*(E1p + 2) + 8*E1p*(8*E1p**5 + 48*E1p**4 + 106*E1p**3 + 104*E1p**2 + 43*E1p + 5))/(64*(A1p + 1)**2)',
    'F1p': '0',
    'F2p': 'A1p',
    'F3p': 'B2p',
    'F4p': '(16*A1p**4*(E1p + 1)**4 + 8*A1p**3*(E1p + 1)**2*(8*E1p**2 + 16*E1p + 9) + A1p**2*(16*B2p*(E1p + 1)**2 + 96*E1p**4 + 384*E1p**3 + 584*E1p**2 + 400*E1p + 105) + 4*A1p*(B2p*(8*E1p**2 + 16*E1p + 5) + 16*E1p**4 + 64*E1p**3 + 94*E1p**2 + 60*E1p + 13) - 12*B2p**2 + 4*B2p*(4*E1p**2 + 8*E1p - 2) + 8*E1p*(2*E1p**3 + 8*E1p**2 + 11*E1p + 6))/(32*A1p + 32)',
    'G1p': '(64*A1p**6*(E1p + 1)**6 + 16*A1p**5*(E1p + 1)**4*(24*E1p**2 + 48*E1p + 23) - 4*A1p**4*(8*B2p*(E1p + 1)**4 - 3*(E1p + 1)**2*(80*E1p**4 + 320*E1p**3 + 464*E1p**2 + 288*E1p + 65)) + A1p**3*(-16*B2p*(E1p + 1)**2*(8*E1p**2 + 16*E1p + 9) + 1280*E1p**6 + 7680*E1p**5 + 18592*E1p**4 + 23168*E1p**3 + 15616*E1p**2 + 5376*E1p + 733) - 2*A1p**2*(8*B2p**2*(E1p + 1)**2 + B2p*(96*E1p**4 + 384*E1p**3 + 584*E1p**2 + 400*E1p + 105) - 480*E1p**6 - 2880*E1p**5 - 6784*E1p**4 - 7936*E1p**3 - 4790*E1p**2 - 1444*E1p - 137) - 4*A1p*(B2p**2*(8*E1p**2 + 16*E1p + 5) + 2*B2p*(16*E1p**4 + 64*E1p**3 + 94*E1p**2 + 60*E1p + 13) - 96*E1p**6 - 576*E1p**5 - 1308*E1p**4 - 1392*E1p**3 - 698*E1p**2 - 204*E1p - 4) + 8*B2p**3 + 8*B2p**2*(-2*E1p**2 - 4*E1p + 1) - 16*B2p*E1p*(2*E1p**3 + 8*E1p**2 + 11*E1p + 6) + 16*E1p*(4*E1p**5 + 24*E1p**4 + 52*E1p**3 + 48*E1p**2 + 17*E1p + 9))/(128*(A1p + 1)**2)',
    'G2p': 'E1p/2',
    'G3p': 'A1p**2*(E1p + 1)**2/2 + A1p*(8*E1p**2 + 16*E1p + 7)/8 - B2p/4 + E1p*(2*E1p + 3)/4',
    'G4p': '(16*A1p**4*(E1p + 1)**4 + 8*A1p**3*(E1p + 1)**2*(8*E1p**2 + 16*E1p + 7) + A1p**2*(16*B2p*(E1p + 1)**2 + 96*E1p**4 + 384*E1p**3 + 536*E1p**2 + 304*E1p + 61) + 4*A1p*(B2p*(8*E1p**2 + 16*E1p + 7) + 16*E1p**4 + 64*E1p**3 + 82*E1p**2 + 38*E1p + 6) - 12*B2p**2 + 16*B2p*E1p*(E1p + 2) + 8*E1p*(2*E1p**3 + 8*E1p**2 + 9*E1p + 3))/(64*A1p + 64)',
    'H1p': '(64*A1p**6*(E1p + 1)**6 + 384*A1p**5*(E1p + 1)**6 + 4*A1p**4*(E1p + 1)**2*(-8*B2p*(E1p + 1)**2 + 240*E1p**4 + 960*E1p**3 + 1412*E1p**2 + 904*E1p + 213) - 2*A1p**3*(64*B2p*(E1p + 1)**4 - 640*E1p**6 - 3840*E1p**5 - 9376*E1p**4 - 11904*E1p**3 - 8264*E1p**2 - 2960*E1p - 425) + A1p**2*(-16*B2p**2*(E1p + 1)**2 - 2*B2p*(96*E1p**4 + 384*E1p**3 + 560*E1p**2 + 352*E1p + 83) + 960*E1p**6 + 5760*E1p**5 + 13728*E1p**4 + 16512*E1p**3 + 10444*E1p**2 + 3216*E1p + 359) - 4*A1p*(8*B2p**2*(E1p + 1)**2 + B2p*(32*E1p**4 + 128*E1p**3 + 176*E1p**2 + 96*E1p + 19) - 96*E1p**6 - 576*E1p**5 - 1328*E1p**4 - 1472*E1p**3 - 798*E1p**2 - 184*E1p - 10) + 8*B2p**3 - 4*B2p**2*(4*E1p**2 + 8*E1p + 1) - 32*B2p*E1p*(E1p + 1)**2*(E1p + 2) + 8*E1p*(8*E1p**5 + 48*E1p**4 + 106*E1p**3 + 104*E1p**2 + 43*E1p + 5))/(64*(A1p + 1)**2)',
    'H2p': 'E1p',
    'H3p': 'A1p**2*E1p**2 + 2*A1p**2*E1p + A1p**2 + 2*A1p*E1p**2 + 4*A1p*E1p + 9*A1p/4 - B2p/2 + E1p**2 + 3*E1p/2',
    'H4p': '(16*A1p**4*(E1p + 1)**4 + 8*A1p**3*(E1p + 1)**2*(8*E1p**2 + 16*E1p + 7) + A1p**2*(16*B2p*(E1p + 1)**2 + 96*E1p**4 + 384*E1p**3 + 536*E1p**2 + 304*E1p + 53) + 4*A1p*(B2p*(8*E1p**2 + 16*E1p + 11) + 16*E1p**4 + 64*E1p**3 + 82*E1p**2 + 38*E1p + 4) - 12*B2p**2 + 16*B2p*(E1p + 1)**2 + 8*E1p*(2*E1p**3 + 8*E1p**2 + 9*E1p + 3))/(32*A1p + 32)',
    'I1p': '(16*A1p**4*(E1p + 1)**4 + 8*A1p**3*(E1p + 1)**2*(8*E1p**2 + 16*E1p + 7) + A1p**2*(16*B2p*(E1p + 1)**2 + 96*E1p**4 + 384*E1p**3 + 536*E1p**2 + 304*E1p + 61) + 4*A1p*(B2p*(8*E1p**2 + 16*E1p + 7) + 16*E1p**4 + 64*E1p**3 + 82*E1p**2 + 38*E1p + 6) - 12*B2p**2 + 16*B2p*E1p*(E1p + 2) + 8*E1p*(2*E1p**3 + 8*E1p**2 + 9*E1p + 3))/(64*A1p + 64)',
    'I2p': '(64*A1p**6*(E1p + 1)**6 + 16*A1p**5*(E1p + 1)**4*(24*E1p**2 + 48*E1p + 23) - 4*A1p**4*(8*B2p*(E1p + 1)**4 - 3*(E1p + 1)**2*(80*E1p**4 + 320*E1p**3 + 464*E1p**2 + 288*E1p + 65)) + A1p**3*(-16*B2p*(E1p + 1)**2*(8*E1p**2 + 16*E1p + 9) + 1280*E1p**6 + 7680*E1p**5 + 18592*E1p**4 + 23168*E1p**3 + 15616*E1p**2 + 5376*E1p + 733) - 2*A1p**2*(8*B2p**2*(E1p + 1)**2 + B2p*(96*E1p**4 + 384*E1p**3 + 584*E1p**2 + 400*E1p + 105) - 480*E1p**6 - 2880*E1p**5 - 6784*E1p**4 - 7936*E1p**3 - 4790*E1p**2 - 1444*E1p - 137) - 4*A1p*(B2p**2*(8*E1p**2 + 16*E1p + 5) + 2*B2p*(16*E1p**4 + 64*E1p**3 + 94*E1p**2 + 60*E1p + 13) - 96*E1p**6 - 576*E1p**5 - 1308*E1p**4 - 1392*E1p**3 - 698*E1p**2 - 204*E1p - 4) + 8*B2p**3 + 8*B2p**2*(-2*E1p**2 - 4*E1p + 1) - 16*B2p*E1p*(2*E1p**3 + 8*E1p**2 + 11*E1p + 6) + 16*E1p*(4*E1p**5 + 24*E1p**4 + 52*E1p**3 + 48*E1p**2 + 17*E1p + 9))/(128*(A1p + 1)**2)',
    'I3p': 'E1p/2',
    'I4p': 'A1p**2*(E1p + 1)**2/2 + A1p*(8*E1p**2 + 16*E1p + 7)/8 - B2p/4 + E1p*(2*E1p + 3)/4',
}

K3_QUADRATIC = 'A1p**2*(E1p + 1)**2 + 2*A1p*(E1p + 1)**2 + E1p**2 + 2*E1p - (16*L**4 - 16)/(32*L**3*sj + 24*L**2 + 8*L*sj + 17)'

# same relation with the denominator read as (1 + 2 sj L)^4
K3_QUADRATIC_L4 = 'A1p**2*(E1p + 1)**2 + 2*A1p*(E1p + 1)**2 + E1p**2 + 2*E1p - (16*L**4 - 16)/(32*L**3*sj + 24*L**2 + 8*L*sj + 16*L**4 + 1)'

CORRECTIONS = {
    'J11': 'denominator printed with I21b; the common Delta is used',
    'TABLE_33.A2p': 'prefactor applied to the whole bracket (printed without parentheses)',
    'TABLE_42.F3p': 'printed as B_2; read as B2p',
}
