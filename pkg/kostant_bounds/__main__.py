from kostant_bounds.adapters.inbound.cli import main

if __name__ == '__main__':
    main()
