"""Exact real arithmetic and certified integration on [0, 1].

Reals are regular approximation functions over the rationals (a completion
monad); integrands are sampled onto formal step functions, which are folded
exactly.  Every answer comes with the precision it was asked for.
"""
from .completion import (
    Complete,
    answer,
    ball_approx,
    c_bind,
    c_join,
    c_map,
    c_return,
    r_abs,
    r_add,
    r_neg,
    r_scale,
)
from .foundations import UcFunQQ, UcFunQR, UcFunRR, decimal_round, qball
from .functions import cos_uc, exp_uc, poly_uc, sin_uc
from .integration import (
    b_sup,
    id01,
    integral,
    integrate01,
    integrate01_qq,
    integrate01_qr,
    iota_lift,
    q_cantor,
    q_dirac,
    q_uniform,
    stieltjes,
    sup01,
)
from .stepfn import Const, Glue, s_ap, s_eqv, s_map, s_map2, split_l, split_r

__version__ = "0.1.0"
