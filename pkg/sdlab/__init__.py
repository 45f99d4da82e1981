# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Numerical laboratory for the Dirichlet problem of elliptic equations with a
singular drift on the unit disk.
"""

__version__ = '0.1.0'
