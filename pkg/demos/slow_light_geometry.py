"""Group velocity and cell dimensions for three operating points.

The probe dispersion fixes how slowly a photon crawls through the
medium, and with the interaction time it fixes how long (and therefore
how thick and how dense) the cell must be.  Steady-state dispersion is
the right figure for quasi-continuous operation; for the fast transient
gate the velocity is averaged over the interaction window instead.
"""

from eitgate import groupvel
from eitgate.mscheme import MSchemeParams

_DECAYS = dict(gamma21=1 / 3, gamma23=1 / 3, gamma25=1 / 3,
               gamma41=1 / 3, gamma43=1 / 3, gamma45=1 / 3)
_DEPH = dict(gamma_deph_1=1e-3, gamma_deph_2=1e-3, gamma_deph_4=1e-3, gamma_deph_5=1e-3)

SETS = {
    "transient": (MSchemeParams(
        N_a=1e8, g_p=0.0022, g_t=0.0022, Omega1=4.0, Omega4=4.0,
        delta2=15.0, delta3=15.0, eps12=0.01, eps34=0.01, **_DECAYS, **_DEPH,
    ), 0.4),
    "pulsed": (MSchemeParams(
        N_a=1e8, g_p=0.0009, g_t=0.0009, Omega1=1.0, Omega4=1.0,
        delta2=6.0, delta3=6.0, eps12=0.05, eps34=0.05, **_DECAYS,
    ), 1.0),
    "long-time": (MSchemeParams(
        N_a=1e6, g_p=0.0011, g_t=0.0011, Omega1=1.875, Omega4=1.875,
        delta2=7.5, delta3=7.5, eps12=0.05, eps34=0.05, **_DECAYS, **_DEPH,
    ), 500.0),
}


def report(name, v_g, geo):
    print(f"{name:>10}: v_g = {v_g:11.4e} m/s   L = {geo.length:10.4e} m   "
          f"d = {geo.diameter:10.4e} m   n = {geo.density / 1e6:10.4e} cm^-3")


def main():
    print("steady-state dispersion:")
    for name, (params, t_int) in SETS.items():
        v_g = groupvel.group_velocity_steady(params)
        report(name, v_g, groupvel.cell_geometry(params, v_g, t_int))

    print("window-averaged dispersion for the transient set:")
    params, t_int = SETS["transient"]
    v_bar = groupvel.group_velocity_transient(params, t_int, avg_grid=200)
    report("transient", v_bar, groupvel.cell_geometry(params, v_bar, t_int))
    v_g = groupvel.group_velocity_steady(params)
    print(f"  the average is {v_bar / v_g:.2f}x the steady value: the medium is")
    print(f"  less dispersive while the dark state is still forming")


if __name__ == "__main__":
    main()
