# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/

### File setup.py obsolete and must not be used. Please update pyproject.toml instead.
### See detailed explanation why here:
### https://blog.ganssle.io/articles/2021/10/setup-py-deprecated.html.
# PEP 621 – Storing project metadata in pyproject.toml - https://peps.python.org/pep-0621/
# PEP 518 – Specifying Minimum Build System Requirements for Python Projects https://peps.python.org/pep-0518/
# PEP 508 – Dependency specification for Python Software Packages - https://peps.python.org/pep-0508/
# PEP 517 – A build-system independent format for source trees - https://peps.python.org/pep-0517/
