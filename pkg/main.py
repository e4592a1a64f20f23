#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Copyright (c) 2026, the specpot team.

Distributed under the terms of the GPL v3 License.

The full license is in the file LICENSE, distributed with this software.

Created on Mar 1, 2026

@author: specpot team
"""

from specpot.app import main

if __name__ == '__main__':
    main()
