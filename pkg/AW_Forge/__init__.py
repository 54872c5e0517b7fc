"""
AW Forge - Askey-Wilson and Racah algebra realizations

Builds the (X, Y) realizations of the Racah and Askey-Wilson algebras over
su(2), su(1,1), osc, U_q(su(2)) and U_q(su(1,1)) representations, verifies their
defining relations as exact matrix identities, and checks the induced
three-term recurrences against Askey-scheme polynomial evaluations.
"""

__version__ = "0.1.0"
__author__ = "AW Forge"

REPORT_SCHEMA = "aw-forge/1"

__all__ = ["REPORT_SCHEMA", "__version__"]
