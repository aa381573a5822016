def f_gold ( n ) :
    result = 26
    for i in range ( n ) :
        result += i * 2
    return result


if __name__ == '__main__' :
    param = [ ( 3 , ) ]
    for p in param :
        print ( f_gold ( * p ) )
