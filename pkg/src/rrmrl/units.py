"""dB / dBm / linear conversions, kept in one place so unit bugs stay local."""

import numpy as np


def db_to_linear(x_db):
    """Power ratio from dB."""
    return 10.0 ** (np.asarray(x_db, dtype=float) / 10.0)


def linear_to_db(x):
    """dB from a (strictly positive) power ratio."""
    x = np.asarray(x, dtype=float)
    return 10.0 * np.log10(x)


def dbm_to_mw(p_dbm):
    """Transmit/noise powers are handled in milliwatts throughout."""
    return 10.0 ** (np.asarray(p_dbm, dtype=float) / 10.0)


def mw_to_dbm(p_mw):
    p_mw = np.asarray(p_mw, dtype=float)
    return 10.0 * np.log10(p_mw)
