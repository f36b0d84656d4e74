# Configuration file for the Sphinx documentation builder.
#
# http://www.sphinx-doc.org/en/master/config

import pathlib
import sys
from datetime import datetime

import sphinx_rtd_theme  # noqa: F401

module_path = pathlib.Path(__file__).resolve().parents[2]
sys.path.insert(0, str(module_path))

# -- Project information -----------------------------------------------------

project = "gaplab"
author = "gaplab developers"

year = datetime.now().year
copyright = f"{year}, {author}"

version = ""
release = ""


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinxcontrib.jquery",
    "numpydoc",
    "recommonmark",
    "docs_versions_menu",
    "sphinx_rtd_theme",
]


autosummary_generate = True
numpydoc_show_class_members = False

source_suffix = ".rst"
master_doc = "index"
language = "en"
exclude_patterns = []

default_role = 'any'
pygments_style = "sphinx"


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = "gaplab_doc"


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, "gaplab", "gaplab Documentation", [author], 1),
]


# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}
