from pathlib import Path
from setuptools import setup, find_packages

README = (Path(__file__).parent / 'README.md').read_text()

setup(
    name='pystocknet',
    version='0.1.0',
    description=('Correlation and mutual information networks of intraday '
                 'stock returns, with random matrix theory diagnostics'),
    long_description=README,
    long_description_content_type='text/markdown',
    license='MIT',
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.8'
    ],
    packages=find_packages(where='src'),
    package_dir={'': 'src'},
    package_data={'pystocknet': ['settings_example.json']},
    python_requires='>=3.8',
    install_requires=[
        'pandas>=1.3',
        'numpy>=1.20',
        'scipy>=1.7',
        'tqdm',
        'networkx>=2.6',
        'joblib>=1.0'
    ],
    extras_require={
        'test': ['pytest']
    },
    entry_points={
        'console_scripts': ['pystocknet=pystocknet.main:run']
    },
    include_package_data=True,
    zip_safe=False
)
