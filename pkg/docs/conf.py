# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

from wagbound import __version__

project = "wagbound"
copyright = "2026, wagbound developers"
author = "wagbound developers"
version = __version__
release = __version__

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx_design",
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
]

add_module_names = False
toc_object_entries = False

autodoc_member_order = "bysource"
autodoc_typehints = "none"
# scikit-learn is an optional extra
autodoc_mock_imports = ["sklearn"]

autosummary_generate = True
autosummary_generate_overwrite = True
autosummary_imported_members = True

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_show_sourcelink = False
