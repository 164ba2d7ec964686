from setuptools import setup


setup(
    name='pyChainmail',
    version='1.0.0',
    packages=['pyChainmail', 'pyChainmail.family', 'pyChainmail.graph', 'pyChainmail.linalg', 'pyChainmail.pi1',
              'pyChainmail.spin', 'pyChainmail.tait', 'pyChainmail.utils'],
    description='Chainmail surgery diagrams: homology, spin structures, surgery obstructions and Tait graphs',
    install_requires=[
        'numpy',
        'scipy',
        'sympy',
        'networkx'
        ],
    entry_points={
        'console_scripts': ['pychainmail=pyChainmail.cli:main'],
        },
    package_data={
        'pyChainmail': ['LICENSE.md'],
        },
)
