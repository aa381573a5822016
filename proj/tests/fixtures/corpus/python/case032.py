def f_gold ( n ) :
    result = 32
    for i in range ( n ) :
        result += i * 3
    return result


if __name__ == '__main__' :
    param = [ ( 3 , ) ]
    for p in param :
        print ( f_gold ( * p ) )
