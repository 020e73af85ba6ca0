from setuptools import setup, find_packages

setup(
    name = 'zigzag',
    version = '1.0.0',
    description = 'Exact calculus of affine surfaces completable by zigzags of type (0,-1,-a,-b): pairs, reversions, birational words and fibration graphs.',
    license = "MIT",
    python_requires = '>=3.6',
    packages = find_packages(exclude = ['tests', 'tests.*']),
    install_requires = [
        "numpy",
        "scipy",
        "tqdm",
        "sympy",
        "graphviz"
    ],
    extras_require = {
        "test" : [
            "pytest",
            "hypothesis"
        ]
    },
    entry_points = {
        'console_scripts' : [
            'zz = zigzag.cli:main'
        ]
    },
    zip_safe = True
)
